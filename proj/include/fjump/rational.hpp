#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace fjump {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num) : num_(num), den_(1) {}       // NOLINT(implicit)
  Rational(int num) : num_(num), den_(1) {}                // NOLINT(implicit)
  Rational(BigInt num, BigInt den);

  /// Accepts "a", "a/b", optionally signed; never floating point.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

/// Exact floor(n / d) for d > 0.
BigInt floor_div(const BigInt& n, const BigInt& d);
/// Exact ceil(n / d) for d > 0.
BigInt ceil_div(const BigInt& n, const BigInt& d);
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Narrowing with a range check; throws BudgetExceeded when the value does not fit.
std::uint64_t to_u64(const BigInt& v, const char* what);

}  // namespace fjump
