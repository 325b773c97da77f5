#include "fjump/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "fjump/error.hpp"

namespace fjump {

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  auto digits = [&](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view n = body.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(n) || !digits(d))
    throw DomainError("malformed rational '" + std::string(text) + "' (expected a or a/b)");
  BigInt num{std::string(n)};
  BigInt den{std::string(d)};
  if (den == 0) throw DomainError("malformed rational '" + std::string(text) + "': zero denominator");
  return Rational(negative ? BigInt(-num) : num, den);
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;  // truncates toward zero
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

BigInt ceil_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if ((n % d != 0) && (n > 0)) ++q;
  return q;
}

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp) b *= b;
  }
  return result;
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw BudgetExceeded(std::string(what) + " out of 64-bit range");
  return v.convert_to<std::uint64_t>();
}

BigInt Rational::floor() const { return floor_div(num_, den_); }
BigInt Rational::ceil() const { return ceil_div(num_, den_); }

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace fjump
