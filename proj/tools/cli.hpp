#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fjump::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kBudget = 4,
  kVerificationFailed = 5,
};

/// Runs one command line (without the program name); results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fjump::cli
