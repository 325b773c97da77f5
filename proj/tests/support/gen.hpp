#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fjump/ideal.hpp"
#include "fjump/polynomial.hpp"

namespace fjump::testing {

inline RingPtr ring(std::uint32_t p, std::vector<std::string> vars = {"x", "y"}) {
  return RingContext::make(p, std::move(vars));
}

inline Polynomial P(const RingPtr& ctx, const char* text) { return parse_poly(text, ctx); }

inline Ideal I(const RingPtr& ctx, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(parse_poly(g, ctx));
  return Ideal(ctx, std::move(v));
}

/// Small random polynomials: a handful of terms with bounded degree.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[uniform(0, v.size() - 1)];
  }

  Monomial monomial(std::size_t nvars, std::uint32_t max_deg) {
    Monomial m;
    std::uint32_t budget = static_cast<std::uint32_t>(uniform(0, max_deg));
    for (std::size_t i = 0; i < nvars && budget; ++i) {
      auto e = static_cast<std::uint32_t>(uniform(0, budget));
      m.e[i] = e;
      budget -= e;
    }
    if (nvars > 1 && uniform(0, 1)) std::swap(m.e[0], m.e[nvars - 1]);
    return m;
  }

  Polynomial poly(const RingPtr& ctx, std::size_t max_terms, std::uint32_t max_deg) {
    std::vector<Monomial> mons;
    std::vector<std::uint32_t> coeffs;
    auto n = uniform(1, max_terms);
    for (std::uint64_t i = 0; i < n; ++i) {
      mons.push_back(monomial(ctx->nvars(), max_deg));
      coeffs.push_back(static_cast<std::uint32_t>(uniform(1, ctx->p() - 1)));
    }
    return Polynomial::from_terms(ctx, std::move(mons), std::move(coeffs));
  }

  Polynomial nonzero_poly(const RingPtr& ctx, std::size_t max_terms, std::uint32_t max_deg) {
    for (;;) {
      Polynomial f = poly(ctx, max_terms, max_deg);
      if (!f.is_zero()) return f;
    }
  }

  /// Non-constant, vanishing at the origin.
  Polynomial singular_poly(const RingPtr& ctx, std::size_t max_terms, std::uint32_t max_deg) {
    for (;;) {
      Polynomial f = poly(ctx, max_terms, max_deg);
      bool ok = !f.is_zero() && !f.is_constant();
      for (const auto& m : f.monomials()) ok = ok && !m.is_one();
      if (ok) return f;
    }
  }

  Ideal ideal(const RingPtr& ctx, std::size_t max_gens, std::size_t max_terms, std::uint32_t max_deg) {
    std::vector<Polynomial> gens;
    auto n = uniform(1, max_gens);
    for (std::uint64_t i = 0; i < n; ++i) gens.push_back(nonzero_poly(ctx, max_terms, max_deg));
    return Ideal(ctx, std::move(gens));
  }

  /// Generated by polynomials vanishing at the origin, so never the unit ideal.
  Ideal proper_ideal(const RingPtr& ctx, std::size_t max_gens, std::size_t max_terms, std::uint32_t max_deg) {
    std::vector<Polynomial> gens;
    auto n = uniform(1, max_gens);
    for (std::uint64_t i = 0; i < n; ++i) gens.push_back(singular_poly(ctx, max_terms, max_deg));
    return Ideal(ctx, std::move(gens));
  }

  /// a1^q b1 + a2^q b2 with a1, a2 vanishing at the origin, so I_e (q = p^e) is usually proper.
  Polynomial root_rich(const RingPtr& ctx, std::uint64_t q) {
    auto qe = static_cast<std::uint32_t>(q);
    for (;;) {
      Polynomial f = pow(singular_poly(ctx, 2, 2), q) * nonzero_poly(ctx, 3, qe + 1) +
                     pow(singular_poly(ctx, 2, 2), q) * nonzero_poly(ctx, 3, qe + 1);
      if (!f.is_zero()) return f;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fjump::testing
