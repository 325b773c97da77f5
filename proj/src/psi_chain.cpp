#include "fjump/psi_chain.hpp"

#include <stdexcept>

#include "fjump/error.hpp"
#include "fjump/frobenius.hpp"
#include "fjump/test_ideal.hpp"

namespace fjump {

BigInt psi(std::uint32_t e, const BigInt& q) {
  if (q < 2) throw DomainError("psi needs q >= 2");
  return (ipow(q, e) - 1) / (q - 1);
}

ChainTrace chain(const Polynomial& g, const BigInt& a, std::uint32_t beta, const ChainOptions& opts) {
  if (g.is_zero()) throw DomainError("chain of the zero polynomial");
  if (a < 0) throw DomainError("chain needs a >= 0");
  if (beta == 0) throw DomainError("chain needs beta >= 1");
  const RingPtr& ctx = g.context();
  const BigInt q = ipow(BigInt(ctx->p()), beta);

  ChainTrace trace{g, a, beta, {}, 0, 0};
  Ideal cur = Ideal::unit(ctx);
  for (std::uint32_t s = 1; s <= opts.s_max + 1; ++s) {
    Ideal next(ctx, phi_step(g, a, beta, cur).reduced_gb());
    if (s <= opts.direct_depth) {
      Ideal direct = frobenius_root_ideal(Ideal::principal(pow(g, a * psi(s, q))), s * beta);
      if (!ideal_equal(direct, next))
        throw std::logic_error("chain term C_" + std::to_string(s) + " disagrees with its definition");
      trace.direct_checked = s;
    }
    bool repeat = !trace.terms.empty() && ideal_equal(trace.terms.back(), next);
    trace.terms.push_back(next);
    if (repeat) {
      trace.stab_index = s - 1;
      return trace;
    }
    cur = std::move(next);
  }
  throw BudgetExceeded("chain for a=" + a.str() + ", beta=" + std::to_string(beta) +
                       " did not stabilize within s_max=" + std::to_string(opts.s_max));
}

NilClass nil_class(const Polynomial& g, const BigInt& a, std::uint32_t beta, const ChainOptions& opts) {
  if (beta == 0) throw DomainError("nil class needs beta >= 1");
  Rational gamma(a, ipow(BigInt(g.ring().p()), beta) - 1);
  if (a == 0) {
    if (g.is_zero()) throw DomainError("chain of the zero polynomial");
    return NilClass{a, beta, gamma, Ideal::unit(g.context())};
  }
  ChainTrace t = chain(g, a, beta, opts);
  return NilClass{a, beta, gamma, t.representative()};
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::equal: return "equal";
    case Containment::first_larger: return "first contains second";
    case Containment::second_larger: return "second contains first";
    case Containment::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

Containment compare_ideals(const Ideal& I, const Ideal& J) {
  bool ij = ideal_contains(I, J);
  bool ji = ideal_contains(J, I);
  if (ij && ji) return Containment::equal;
  if (ij) return Containment::first_larger;
  if (ji) return Containment::second_larger;
  return Containment::incomparable;
}

Containment reversed(Containment c) {
  if (c == Containment::first_larger) return Containment::second_larger;
  if (c == Containment::second_larger) return Containment::first_larger;
  return c;
}

}  // namespace

bool NilOrder::monotone() const {
  if (gamma_order < 0) return ideals == Containment::first_larger || ideals == Containment::equal;
  if (gamma_order > 0) return ideals == Containment::second_larger || ideals == Containment::equal;
  return ideals == Containment::equal;
}

std::string NilOrder::describe() const {
  const char* g = gamma_order < 0 ? "gamma1 < gamma2" : gamma_order > 0 ? "gamma1 > gamma2" : "gamma1 = gamma2";
  std::string rep;
  switch (ideals) {
    case Containment::equal: rep = "rep1 = rep2, Nil1 = Nil2"; break;
    case Containment::first_larger: rep = "rep1 ⊋ rep2, Nil1 ⊊ Nil2"; break;
    case Containment::second_larger: rep = "rep1 ⊊ rep2, Nil1 ⊋ Nil2"; break;
    case Containment::incomparable: rep = "rep1, rep2 incomparable"; break;
  }
  return std::string(g) + "; " + rep;
}

NilOrder nil_compare(const NilClass& n1, const NilClass& n2) {
  if (!n1.representative.context()->same_as(*n2.representative.context()))
    throw ContextMismatch();
  NilOrder out;
  out.gamma_order = n1.gamma <=> n2.gamma;
  out.ideals = compare_ideals(n1.representative, n2.representative);
  out.nils = reversed(out.ideals);
  return out;
}

BijectionResult bijection_check(const Polynomial& g, const Rational& c, const Rational& upper,
                                std::uint32_t beta_max, const ChainOptions& opts) {
  if (c.sign() < 0) throw DomainError("bijection check needs c >= 0");
  BijectionResult res;
  if (upper <= c) {
    res.detail = "empty search interval (" + c.str() + ", " + upper.str() + "]";
    return res;
  }
  const Ideal expected = tau(g, c, TauOptions{opts.s_max});
  const BigInt p(g.ring().p());
  for (std::uint32_t beta = 1; beta <= beta_max; ++beta) {
    BigInt m = ipow(p, beta) - 1;
    BigInt a = (c * Rational(m)).floor() + 1;
    Rational gamma(a, m);
    if (gamma > upper) continue;
    NilClass cls = nil_class(g, a, beta, opts);
    res.ok = ideal_equal(cls.representative, expected);
    res.detail = "gamma = " + gamma.str() + " (a=" + a.str() + ", beta=" + std::to_string(beta) + "): " +
                 (res.ok ? "representative equals tau" : "representative " + format_ideal(cls.representative) +
                                                            " differs from tau = " + format_ideal(expected));
    res.witness = std::move(cls);
    return res;
  }
  res.detail = "no a/(p^beta-1) in (" + c.str() + ", " + upper.str() + "] with beta <= " + std::to_string(beta_max);
  return res;
}

}  // namespace fjump
