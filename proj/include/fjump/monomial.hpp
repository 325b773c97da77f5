#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace fjump {

inline constexpr std::size_t kMaxVars = 8;
/// Largest exponent a lane may hold. Keeps every lane sum (total degree) inside int32.
inline constexpr std::uint32_t kMaxExponent = (1U << 24) - 1;

/// Exponent vector packed into eight 32-bit lanes; lanes past the ring's variable count stay zero.
struct alignas(32) Monomial {
  std::array<std::uint32_t, kMaxVars> e{};

  static Monomial one() { return {}; }
  static Monomial var(std::size_t i, std::uint32_t exp = 1) {
    Monomial m;
    m.e[i] = exp;
    return m;
  }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

/// Product; throws ExponentOverflow past kMaxExponent.
Monomial mul(const Monomial& a, const Monomial& b);

/// Quotient b / a; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) q.e[i] = b.e[i] - a.e[i];
  return q;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return m;
}

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
inline std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.degree();
  std::uint32_t db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return b.e[i] <=> a.e[i];  // smaller last exponent wins
  }
  return std::strong_ordering::equal;
}

/// Pure lexicographic comparison with x_1 > x_2 > ...
inline std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
  return std::strong_ordering::equal;
}

enum class MonomialOrder { grevlex, lex };

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fjump
