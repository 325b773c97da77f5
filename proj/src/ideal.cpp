#include "fjump/ideal.hpp"

#include <algorithm>

#include "fjump/error.hpp"
#include "fjump/simd/kernels.hpp"
#include "poly_internal.hpp"

namespace fjump {
namespace {

bool lead_less(const Polynomial& a, const Polynomial& b) { return grevlex_cmp(a.lead(), b.lead()) < 0; }

std::vector<Polynomial> minimal_monomial_basis(std::vector<Polynomial> gens) {
  std::sort(gens.begin(), gens.end(), lead_less);
  std::vector<Polynomial> kept;
  std::vector<Monomial> leads;
  for (auto& g : gens) {
    if (simd::kernels().find_divisor(g.lead(), leads.data(), leads.size()) < leads.size()) continue;
    leads.push_back(g.lead());
    kept.push_back(g.monic());
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

struct Pair {
  std::uint32_t i;
  std::uint32_t j;
  Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
  auto c = grevlex_cmp(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}

// Buchberger with the Gebauer-Moeller installation of both criteria, normal
// selection strategy, and input generators queued alongside S-pairs by degree.
class Buchberger {
 public:
  Buchberger(const RingPtr& ctx, const GbOptions& opts) : ctx_(ctx), opts_(opts) {}

  std::vector<Polynomial> run(std::vector<Polynomial> inputs) {
    std::sort(inputs.begin(), inputs.end(), lead_less);
    std::size_t next_input = 0;
    std::size_t steps = 0;
    while (next_input < inputs.size() || !pairs_.empty()) {
      if (++steps > opts_.max_steps)
        throw BudgetExceeded("Groebner basis exceeded " + std::to_string(opts_.max_steps) + " steps");
      auto best = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      Polynomial h(ctx_);
      if (next_input < inputs.size() &&
          (best == pairs_.end() || grevlex_cmp(inputs[next_input].lead(), best->lcm) <= 0)) {
        h = reduce(inputs[next_input++], active_basis());
      } else {
        Pair pr = *best;
        *best = pairs_.back();
        pairs_.pop_back();
        h = reduce(spoly(pr), active_basis());
      }
      if (h.is_zero()) continue;
      h = h.monic();
      if (h.is_constant()) return {Polynomial::constant(ctx_, 1)};
      install(std::move(h));
    }
    return interreduce();
  }

 private:
  Polynomial spoly(const Pair& pr) const {
    const Polynomial& f = basis_[pr.i];
    const Polynomial& g = basis_[pr.j];
    return f.shifted(quotient(pr.lcm, f.lead())).sub_mul(1, quotient(pr.lcm, g.lead()), g);
  }

  const std::vector<Polynomial>& active_basis() {
    if (active_dirty_) {
      active_cache_.clear();
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (active_[k]) active_cache_.push_back(basis_[k]);
      active_dirty_ = false;
    }
    return active_cache_;
  }

  void install(Polynomial h) {
    const auto t = static_cast<std::uint32_t>(basis_.size());
    const Monomial lh = h.lead();
    std::vector<Pair> cand;
    for (std::uint32_t k = 0; k < t; ++k)
      if (active_[k]) cand.push_back({k, t, lcm(basis_[k].lead(), lh)});

    // Chain criterion among the new pairs: keep one per minimal lcm.
    std::vector<Pair> kept;
    std::vector<bool> gone(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      gone[a] = true;
      bool keep = coprime(basis_[cand[a].i].lead(), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < cand.size() && keep; ++b)
          if (!gone[b] && divides(cand[b].lcm, cand[a].lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (divides(kept[b].lcm, cand[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(cand[a]);
    }

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& pr) {
      if (!divides(lh, pr.lcm)) return false;
      Monomial a = lcm(basis_[pr.i].lead(), lh);
      Monomial b = lcm(basis_[pr.j].lead(), lh);
      return !(a == pr.lcm) && !(b == pr.lcm);
    });

    // Product criterion.
    for (const auto& pr : kept)
      if (!coprime(basis_[pr.i].lead(), lh)) pairs_.push_back(pr);

    for (std::uint32_t k = 0; k < t; ++k)
      if (active_[k] && divides(lh, basis_[k].lead())) active_[k] = false;
    basis_.push_back(std::move(h));
    active_.push_back(true);
    active_dirty_ = true;
  }

  std::vector<Polynomial> interreduce() {
    std::vector<Polynomial> act = active_basis();
    std::sort(act.begin(), act.end(), [](const Polynomial& a, const Polynomial& b) { return lead_less(b, a); });
    std::vector<Polynomial> out;
    out.reserve(act.size());
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < act.size(); ++k) {
      others.clear();
      for (std::size_t l = 0; l < act.size(); ++l)
        if (l != k) others.push_back(act[l]);
      out.push_back(reduce(act[k], others).monic());
    }
    return out;
  }

  const RingPtr& ctx_;
  const GbOptions& opts_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Polynomial> active_cache_;
  bool active_dirty_ = true;
};

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  if (f.is_zero() || basis.empty()) return f;
  const RingContext& ctx = f.ring();
  const auto& kern = simd::kernels();
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> lead_inv;
  leads.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw DomainError("zero polynomial in reduction basis");
    leads.push_back(g.lead());
    lead_inv.push_back(ctx.inv(g.lead_coeff()));
  }

  std::vector<Monomial> cur_m(f.monomials().begin(), f.monomials().end());
  std::vector<std::uint32_t> cur_c(f.coefficients().begin(), f.coefficients().end());
  std::vector<Monomial> rem_m;
  std::vector<std::uint32_t> rem_c;
  std::vector<Monomial> tmp_m;
  std::vector<std::uint32_t> tmp_c;
  std::vector<Monomial> row_m;
  std::vector<std::uint32_t> row_c;
  std::size_t start = 0;
  while (start < cur_m.size()) {
    const Monomial m = cur_m[start];
    std::size_t k = kern.find_divisor(m, leads.data(), leads.size());
    if (k == leads.size()) {
      rem_m.push_back(m);
      rem_c.push_back(cur_c[start]);
      ++start;
      continue;
    }
    const Polynomial& g = basis[k];
    if (g.size() == 1) {  // monomial divisor: the term just vanishes
      ++start;
      continue;
    }
    std::uint32_t factor = ctx.mul(cur_c[start], lead_inv[k]);
    Monomial u = quotient(m, g.lead());
    std::size_t tail = g.size() - 1;
    row_m.resize(tail);
    row_c.resize(tail);
    if (!kern.shift_scale(g.monomials().data() + 1, g.coefficients().data() + 1, tail, u, factor,
                          ctx.p(), row_m.data(), row_c.data()))
      throw ExponentOverflow("monomial exponent exceeds 2^24-1");
    detail::merge_terms(ctx, std::span(cur_m).subspan(start + 1),
                        std::span(cur_c).subspan(start + 1), row_m, row_c, true, tmp_m, tmp_c);
    cur_m.swap(tmp_m);
    cur_c.swap(tmp_c);
    start = 0;
  }
  return Polynomial::from_canonical(f.context(), std::move(rem_m), std::move(rem_c));
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens, const RingPtr& ctx,
                                       const GbOptions& opts) {
  std::vector<Polynomial> inputs;
  bool all_monomial = true;
  for (const auto& g : gens) {
    if (!g.context()->same_as(*ctx)) throw ContextMismatch();
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::constant(ctx, 1)};
    all_monomial = all_monomial && g.is_monomial();
    inputs.push_back(g.monic());
  }
  if (inputs.empty()) return {};
  // Drop exact duplicates; Frobenius decompositions repeat parts often.
  std::sort(inputs.begin(), inputs.end(), [](const Polynomial& a, const Polynomial& b) {
    auto c = grevlex_cmp(a.lead(), b.lead());
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  if (all_monomial) return minimal_monomial_basis(std::move(inputs));
  return Buchberger(ctx, opts).run(std::move(inputs));
}

Ideal::Ideal(RingPtr ctx, std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (!g.context()->same_as(*ctx_)) throw ContextMismatch();
}

Ideal Ideal::unit(RingPtr ctx) {
  Polynomial one = Polynomial::constant(ctx, 1);
  return Ideal(std::move(ctx), {std::move(one)});
}

Ideal Ideal::maximal(RingPtr ctx) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ctx->nvars(); ++i) gens.push_back(Polynomial::variable(ctx, i));
  return Ideal(std::move(ctx), std::move(gens));
}

const std::vector<Polynomial>& Ideal::reduced_gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = groebner_basis(gens_, ctx_); });
  return cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = reduced_gb();
  return gb.size() == 1 && gb[0].is_constant();
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (!f.context()->same_as(*I.context())) throw ContextMismatch();
  return reduce(f, I.reduced_gb());
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  if (!I.context()->same_as(*J.context())) throw ContextMismatch();
  if (I.is_unit()) return true;
  for (const auto& g : J.reduced_gb())
    if (!ideal_member(g, I)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!I.context()->same_as(*J.context())) throw ContextMismatch();
  return I.reduced_gb() == J.reduced_gb();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!I.context()->same_as(*J.context())) throw ContextMismatch();
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.context(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (!I.context()->same_as(*J.context())) throw ContextMismatch();
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.context(), std::move(gens));
}

Ideal ideal_scale(const Polynomial& h, const Ideal& I) {
  if (!h.context()->same_as(*I.context())) throw ContextMismatch();
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(h * g);
  return Ideal(I.context(), std::move(gens));
}

int log_p(const BigInt& q, std::uint32_t p) {
  if (q < 1) return -1;
  BigInt v = q;
  int e = 0;
  while (v > 1) {
    if (v % p != 0) return -1;
    v /= p;
    ++e;
  }
  return e;
}

Ideal bracket_power(const Ideal& I, const BigInt& q) {
  int e = log_p(q, I.context()->p());
  if (e < 0) throw DomainError("bracket power exponent " + q.str() + " is not a power of p");
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius(static_cast<std::uint32_t>(e)));
  return Ideal(I.context(), std::move(gens));
}

std::vector<std::string> ideal_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.reduced_gb()) out.push_back(format_poly(g));
  return out;
}

std::string format_ideal(const Ideal& I) {
  auto parts = ideal_strings(I);
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

}  // namespace fjump
