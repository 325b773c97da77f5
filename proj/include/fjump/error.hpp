#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fjump {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition (invalid prime, c <= 0, zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands built over different rings.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different polynomial rings") {}
};

/// Polynomial text that does not conform to the grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An exponent left the representable lane range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// A configured iteration or size budget ran out before an answer was certain.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace fjump
