#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fjump/rational.hpp"

namespace fjump {

struct CorpusEntry {
  std::uint32_t p = 2;
  std::string f;
  Rational bound{1};
  /// Declared variables; inferred from the polynomial text when empty.
  std::vector<std::string> vars;
  std::optional<std::vector<Rational>> expect_jumps;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

/// One JSON object per non-blank line:
/// {"p": 7, "f": "x^2+y^3", "B": "1", "expect_jumps": ["5/6", "1"], "vars": ["x", "y"]}.
/// Schema violations throw DomainError naming the entry index.
Corpus parse_corpus(std::string_view jsonl);
Corpus load_corpus(const std::string& path);
/// Shipped corpus: cusps, monomials, nodes and smooth curves over p = 2, 3, 5, 7.
Corpus default_corpus();

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  std::uint32_t depth = 6;
  std::uint32_t s_max = 64;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Random rationals sampled between consecutive jumps.
  std::uint32_t constancy_samples = 10;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  /// What was checked, or the failing witness.
  std::string detail;
};

struct EntryReport {
  std::size_t index = 0;
  CorpusEntry entry;
  std::vector<Rational> jumps;
  std::vector<CheckResult> checks;
  /// Set when the entry could not be evaluated at all.
  std::optional<std::string> error;
  double seconds = 0;

  bool passed() const;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<EntryReport> entries;
  double seconds = 0;

  bool passed() const;
  /// Hash over everything except timings; stable across runs for a fixed seed.
  std::string digest() const;
  /// JSON document; timings included on request.
  std::string to_json(bool with_timings = true, int indent = 2) const;
};

/// Check names, in report order.
const std::vector<std::string>& suite_checks();

VerificationReport run_suite(const Corpus& corpus, const SuiteConfig& config = {});

}  // namespace fjump
