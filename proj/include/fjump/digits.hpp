#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fjump/canonical.hpp"
#include "fjump/rational.hpp"

namespace fjump {

/// integer_part + 0.(preperiod)(period)(period)... in base p.
/// Both digit lists are empty for an integer; a terminating fraction has period {0}.
struct BasePExpansion {
  std::uint32_t p = 2;
  BigInt integer_part;
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;

  friend bool operator==(const BasePExpansion&, const BasePExpansion&) = default;
};

/// Long division with remainder-cycle detection; preperiod and period are minimal. s >= 0.
BasePExpansion expand(const Rational& s, std::uint32_t p);

/// {s} = s - m * floor(s / m), in [0, m).
Rational frac_mod(const Rational& s, const BigInt& m);

struct OrbitReport {
  Rational s;
  BigInt m;
  /// s, {p s}, {p^2 s}, ... up to the first repeat.
  std::vector<Rational> orbit;
  std::size_t entry_index = 0;
  std::size_t cycle_length = 0;
};

/// Orbit of s in [0, m) under t -> {p t}.
OrbitReport orbit(const Rational& s, std::uint32_t p, const BigInt& m);

struct Reconstruction {
  Rational value;
  /// Minimal a / (p^d (p^beta - 1)); (0, 0, 1) for zero.
  CanonicalForm form;
};

/// The rational with the given expansion. A trailing period of (p-1)s needs no
/// special handling: the value is exact and its canonical form is the terminating one.
Reconstruction reconstruct(const BasePExpansion& exp);

/// Drops the first k fractional digits: expansion of frac(p^k s) from that of s.
BasePExpansion shift_digits(const BasePExpansion& exp, std::size_t k);

}  // namespace fjump
