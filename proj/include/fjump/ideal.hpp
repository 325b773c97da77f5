#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "fjump/polynomial.hpp"

namespace fjump {

struct GbOptions {
  /// Upper bound on processed S-pairs plus input generators before BudgetExceeded.
  std::size_t max_steps = 2'000'000;
};

/// Reduced Groebner basis under grevlex: monic, inter-reduced, sorted by
/// descending leading monomial. {} for the zero ideal, {1} for the unit ideal.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens, const RingPtr& ctx,
                                       const GbOptions& opts = {});

/// Full reduction of f by a list of monic polynomials (any list; a Groebner
/// basis makes the result canonical).
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

/// Ideal of F_p[x_1..x_n] given by generators. The reduced Groebner basis is
/// computed on first use and shared by copies.
class Ideal {
 public:
  Ideal(RingPtr ctx, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ctx) { return Ideal(std::move(ctx), {}); }
  static Ideal unit(RingPtr ctx);
  /// (x_1, ..., x_n)
  static Ideal maximal(RingPtr ctx);
  static Ideal principal(const Polynomial& f) { return Ideal(f.context(), {f}); }

  const RingPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& reduced_gb() const;

  bool is_zero() const { return reduced_gb().empty(); }
  bool is_unit() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };

  RingPtr ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool ideal_member(const Polynomial& f, const Ideal& I);
/// I ⊇ J
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
inline bool operator==(const Ideal& I, const Ideal& J) { return ideal_equal(I, J); }

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// h * I
Ideal ideal_scale(const Polynomial& h, const Ideal& I);

/// I^{[q]} for q a power of p (q = 1 allowed); throws DomainError otherwise.
Ideal bracket_power(const Ideal& I, const BigInt& q);
/// Exponent e with q = p^e, or -1 when q is not a power of p.
int log_p(const BigInt& q, std::uint32_t p);

/// "g1, g2, ..." over the reduced basis; "0" for the zero ideal.
std::string format_ideal(const Ideal& I);
/// Reduced basis as formatted strings, in basis order.
std::vector<std::string> ideal_strings(const Ideal& I);

}  // namespace fjump
