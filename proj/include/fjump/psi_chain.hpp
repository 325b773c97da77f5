#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fjump/ideal.hpp"
#include "fjump/rational.hpp"

namespace fjump {

/// psi_e(q) = 1 + q + ... + q^{e-1}; psi_0 = 0. Requires q >= 2.
BigInt psi(std::uint32_t e, const BigInt& q);

/// C_s = I_{s beta}(g^{a psi_s(p^beta)}) for s = 1, 2, ..., computed as
/// C_{s+1} = Phi(C_s) with Phi(J) = I_beta(g^a J) and C_1 = Phi((1)).
struct ChainTrace {
  Polynomial g;
  BigInt a;
  std::uint32_t beta;
  /// C_1 .. C_{stab_index + 1}; the last two agree.
  std::vector<Ideal> terms;
  /// First s with C_s = C_{s+1}.
  std::uint32_t stab_index;
  /// Terms cross-checked against the direct definition.
  std::uint32_t direct_checked;

  const Ideal& representative() const { return terms.back(); }
};

struct ChainOptions {
  std::uint32_t s_max = 64;
  /// Terms recomputed straight from the definition (0 disables).
  std::uint32_t direct_depth = 3;
};

/// Throws BudgetExceeded without a fixed point within s_max, std::logic_error
/// when the recursion and the direct definition disagree.
ChainTrace chain(const Polynomial& g, const BigInt& a, std::uint32_t beta, const ChainOptions& opts = {});

struct NilClass {
  BigInt a;
  std::uint32_t beta;
  Rational gamma;
  /// Annihilator ideal of Nil_{a,beta}: the stabilized chain value.
  Ideal representative;
};

NilClass nil_class(const Polynomial& g, const BigInt& a, std::uint32_t beta, const ChainOptions& opts = {});

enum class Containment { equal, first_larger, second_larger, incomparable };

const char* to_string(Containment c);

struct NilOrder {
  std::strong_ordering gamma_order = std::strong_ordering::equal;
  /// Containment of the representatives (ideals).
  Containment ideals;
  /// Containment of the Nil spaces, by annihilator reversal.
  Containment nils;

  bool comparable() const { return ideals != Containment::incomparable; }
  /// gamma_1 < gamma_2 forces representative_1 ⊇ representative_2.
  bool monotone() const;
  std::string describe() const;
};

/// Both classes must come from the same ring.
NilOrder nil_compare(const NilClass& n1, const NilClass& n2);

struct BijectionResult {
  bool ok = false;
  std::optional<NilClass> witness;
  std::string detail;
};

/// Looks for gamma = a/(p^beta - 1) in (c, upper] with beta <= beta_max, where no
/// jump of g lies in (c, upper), and checks that its class represents tau(g^c).
BijectionResult bijection_check(const Polynomial& g, const Rational& c, const Rational& upper,
                                std::uint32_t beta_max = 12, const ChainOptions& opts = {});

}  // namespace fjump
