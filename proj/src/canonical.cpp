#include "fjump/canonical.hpp"

#include "fjump/error.hpp"

namespace fjump {
namespace {

struct Split {
  std::uint32_t d = 0;
  BigInt n1;
};

Split split_den(const BigInt& den, std::uint32_t p) {
  Split s{0, den};
  while (s.n1 % p == 0) {
    s.n1 /= p;
    ++s.d;
  }
  return s;
}

constexpr std::uint64_t kOrderLimit = 50'000'000;

std::uint32_t multiplicative_order(std::uint32_t p, const BigInt& n) {
  if (n == 1) return 1;
  BigInt x = p % n;
  std::uint64_t k = 1;
  while (x != 1) {
    x = (x * p) % n;
    if (++k > kOrderLimit) throw BudgetExceeded("multiplicative order search exceeded limit");
  }
  return static_cast<std::uint32_t>(k);
}

BigInt euler_phi(BigInt n) {
  BigInt result = n;
  for (BigInt q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CanonicalForm build(const Rational& c, std::uint32_t p, const Split& s, std::uint32_t beta) {
  BigInt scale = ipow(BigInt(p), s.d) * (ipow(BigInt(p), beta) - 1);
  // c * p^d (p^beta - 1) is an integer because n1 | p^beta - 1.
  BigInt a = c.num() * scale / c.den();
  return CanonicalForm{a, s.d, beta};
}

}  // namespace

Rational CanonicalForm::value(std::uint32_t p) const {
  return Rational(a, ipow(BigInt(p), d) * (ipow(BigInt(p), beta) - 1));
}

BigInt ceil_mul(const Rational& c, std::uint32_t p, std::uint32_t e) {
  if (c.sign() < 0) throw DomainError("ceil_mul needs c >= 0");
  return ceil_div(c.num() * ipow(BigInt(p), e), c.den());
}

CanonicalForm canonicalize(const Rational& c, std::uint32_t p) {
  if (c.sign() <= 0) throw DomainError("canonical form needs c > 0, got " + c.str());
  Split s = split_den(c.den(), p);
  return build(c, p, s, multiplicative_order(p, s.n1));
}

CanonicalForm canonicalize_euler(const Rational& c, std::uint32_t p) {
  if (c.sign() <= 0) throw DomainError("canonical form needs c > 0, got " + c.str());
  Split s = split_den(c.den(), p);
  BigInt phi = euler_phi(s.n1);
  return build(c, p, s, static_cast<std::uint32_t>(to_u64(phi, "Euler phi")));
}

bool is_p_adic(const Rational& c, std::uint32_t p) { return split_den(c.den(), p).n1 == 1; }

}  // namespace fjump
