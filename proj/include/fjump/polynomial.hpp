#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fjump/monomial.hpp"
#include "fjump/rational.hpp"
#include "fjump/ring.hpp"

namespace fjump {

/// Sparse polynomial over F_p. Terms are kept strictly descending in grevlex
/// with nonzero coefficients, so equal polynomials have identical storage.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(RingPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(RingPtr ctx, std::int64_t c);
  static Polynomial variable(RingPtr ctx, std::size_t i);
  static Polynomial term(RingPtr ctx, const Monomial& m, FpElement c);
  /// Adopts term vectors that are already strictly grevlex-descending with nonzero coefficients.
  static Polynomial from_canonical(RingPtr ctx, std::vector<Monomial> mons,
                                   std::vector<std::uint32_t> coeffs);
  /// Builds from arbitrary (monomial, coefficient) pairs; sorts and combines duplicates.
  static Polynomial from_terms(RingPtr ctx, std::vector<Monomial> mons,
                               std::vector<std::uint32_t> coeffs);

  const RingPtr& context() const { return ctx_; }
  const RingContext& ring() const { return *ctx_; }

  std::size_t size() const { return mons_.size(); }
  bool is_zero() const { return mons_.empty(); }
  bool is_constant() const { return mons_.empty() || (mons_.size() == 1 && mons_[0].is_one()); }
  bool is_monomial() const { return mons_.size() == 1; }

  std::span<const Monomial> monomials() const { return mons_; }
  std::span<const std::uint32_t> coefficients() const { return coeffs_; }

  /// Leading monomial/coefficient under grevlex; requires !is_zero().
  const Monomial& lead() const { return mons_.front(); }
  std::uint32_t lead_coeff() const { return coeffs_.front(); }
  std::uint32_t degree() const;

  Polynomial monic() const;
  Polynomial scaled(FpElement c) const;
  Polynomial shifted(const Monomial& m) const;  // this * m
  /// this * c * m in one pass.
  Polynomial shifted_scaled(const Monomial& m, std::uint32_t c) const;
  /// f(x)^{p^k}: exponents times p^k, coefficients unchanged (they live in F_p).
  Polynomial frobenius(std::uint32_t k) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// this - c * m * g, merged in one pass.
  Polynomial sub_mul(std::uint32_t c, const Monomial& m, const Polynomial& g) const;

 private:
  friend class PolyBuilder;
  void check_same(const Polynomial& other) const;

  RingPtr ctx_;
  std::vector<Monomial> mons_;
  std::vector<std::uint32_t> coeffs_;
};

/// f^r. Splits r into base-p digits and multiplies the Frobenius twists
/// (f^{d_k})^{p^k}; each f^{d_k} comes from square-and-multiply.
Polynomial pow(const Polynomial& f, std::uint64_t r);
Polynomial pow(const Polynomial& f, const BigInt& r);

/// Plain square-and-multiply, kept as a reference route for tests.
Polynomial pow_binary(const Polynomial& f, std::uint64_t r);

/// Parses the polynomial grammar against the declared variables of ctx.
Polynomial parse_poly(std::string_view text, const RingPtr& ctx);

/// Deterministic text form: grevlex-descending terms, coefficients in [1, p), '*' between factors.
std::string format_poly(const Polynomial& f);
std::string format_monomial(const Monomial& m, const RingContext& ctx);

/// Variable names in first-appearance order, read as a letter followed by digits/underscores.
std::vector<std::string> infer_variables(std::string_view text);

}  // namespace fjump
