#pragma once

#include <cstdint>

#include "fjump/rational.hpp"

namespace fjump {

/// c = a / (p^d (p^beta - 1)).
struct CanonicalForm {
  BigInt a;
  std::uint32_t d = 0;
  std::uint32_t beta = 1;

  Rational value(std::uint32_t p) const;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Exact ceil(c * p^e).
BigInt ceil_mul(const Rational& c, std::uint32_t p, std::uint32_t e);

/// d = p-adic valuation of den(c); beta = multiplicative order of p modulo the
/// p-free part of den(c) (1 when that part is 1). Requires c > 0.
CanonicalForm canonicalize(const Rational& c, std::uint32_t p);

/// Same shape with beta = Euler phi of the p-free part: valid, usually not minimal.
CanonicalForm canonicalize_euler(const Rational& c, std::uint32_t p);

/// True when den(c) is a power of p, i.e. c = r / p^e.
bool is_p_adic(const Rational& c, std::uint32_t p);

}  // namespace fjump
