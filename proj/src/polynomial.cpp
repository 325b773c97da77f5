#include "fjump/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "fjump/error.hpp"
#include "fjump/simd/kernels.hpp"
#include "poly_internal.hpp"

namespace fjump {

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  bool ok = true;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.e[i] = a.e[i] + b.e[i];
    ok &= m.e[i] <= kMaxExponent;
  }
  if (!ok) throw ExponentOverflow("monomial exponent exceeds 2^24-1");
  return m;
}

namespace {

inline bool greater(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; }

}  // namespace

void detail::merge_terms(const RingContext& ctx, std::span<const Monomial> am, std::span<const std::uint32_t> ac,
           std::span<const Monomial> bm, std::span<const std::uint32_t> bc, bool subtract,
           std::vector<Monomial>& om, std::vector<std::uint32_t>& oc) {
  om.clear();
  oc.clear();
  om.reserve(am.size() + bm.size());
  oc.reserve(am.size() + bm.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < am.size() && j < bm.size()) {
    auto c = grevlex_cmp(am[i], bm[j]);
    if (c > 0) {
      om.push_back(am[i]);
      oc.push_back(ac[i++]);
    } else if (c < 0) {
      om.push_back(bm[j]);
      oc.push_back(subtract ? ctx.neg(bc[j]) : bc[j]);
      ++j;
    } else {
      std::uint32_t s = subtract ? ctx.sub(ac[i], bc[j]) : ctx.add(ac[i], bc[j]);
      if (s) {
        om.push_back(am[i]);
        oc.push_back(s);
      }
      ++i;
      ++j;
    }
  }
  for (; i < am.size(); ++i) {
    om.push_back(am[i]);
    oc.push_back(ac[i]);
  }
  for (; j < bm.size(); ++j) {
    om.push_back(bm[j]);
    oc.push_back(subtract ? ctx.neg(bc[j]) : bc[j]);
  }
}

class PolyBuilder {
 public:
  static std::vector<Monomial>& mons(Polynomial& f) { return f.mons_; }
  static std::vector<std::uint32_t>& coeffs(Polynomial& f) { return f.coeffs_; }

  static Polynomial shift_scale(const Polynomial& g, const Monomial& m, std::uint32_t c) {
    Polynomial out(g.ctx_);
    if (c == 0 || g.is_zero()) return out;
    out.mons_.resize(g.size());
    out.coeffs_.resize(g.size());
    bool ok = simd::kernels().shift_scale(g.mons_.data(), g.coeffs_.data(), g.size(), m, c,
                                          g.ctx_->p(), out.mons_.data(), out.coeffs_.data());
    if (!ok) throw ExponentOverflow("monomial exponent exceeds 2^24-1");
    return out;
  }

  static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
    Polynomial out(f.ctx_);
    detail::merge_terms(*f.ctx_, f.mons_, f.coeffs_, g.mons_, g.coeffs_, subtract, out.mons_, out.coeffs_);
    return out;
  }

  // Product of g with the terms [lo, hi) of f.
  static Polynomial mul_range(const Polynomial& f, std::size_t lo, std::size_t hi,
                              const Polynomial& g) {
    if (hi - lo == 1) return shift_scale(g, f.mons_[lo], f.coeffs_[lo]);
    std::size_t mid = lo + (hi - lo) / 2;
    return combine(mul_range(f, lo, mid, g), mul_range(f, mid, hi, g), false);
  }
};

void Polynomial::check_same(const Polynomial& other) const {
  if (!ctx_->same_as(*other.ctx_)) throw ContextMismatch();
}

Polynomial Polynomial::constant(RingPtr ctx, std::int64_t c) {
  FpElement v = ctx->element(c);
  return term(std::move(ctx), Monomial::one(), v);
}

Polynomial Polynomial::variable(RingPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw DomainError("variable index out of range");
  return term(std::move(ctx), Monomial::var(i), FpElement{1});
}

Polynomial Polynomial::term(RingPtr ctx, const Monomial& m, FpElement c) {
  Polynomial f(std::move(ctx));
  if (c.value % f.ctx_->p() != 0) {
    f.mons_.push_back(m);
    f.coeffs_.push_back(c.value % f.ctx_->p());
  }
  return f;
}

Polynomial Polynomial::from_canonical(RingPtr ctx, std::vector<Monomial> mons,
                                      std::vector<std::uint32_t> coeffs) {
  Polynomial f(std::move(ctx));
  f.mons_ = std::move(mons);
  f.coeffs_ = std::move(coeffs);
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ctx, std::vector<Monomial> mons,
                                  std::vector<std::uint32_t> coeffs) {
  Polynomial f(std::move(ctx));
  const RingContext& r = *f.ctx_;
  std::vector<std::size_t> idx(mons.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return greater(mons[a], mons[b]); });
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t i = idx[k];
    std::uint32_t c = coeffs[i] % r.p();
    std::size_t l = k + 1;
    for (; l < idx.size() && mons[idx[l]] == mons[i]; ++l) c = r.add(c, coeffs[idx[l]] % r.p());
    if (c) {
      f.mons_.push_back(mons[i]);
      f.coeffs_.push_back(c);
    }
    k = l;
  }
  return f;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& m : mons_) d = std::max(d, m.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coeff() == 1) return *this;
  return scaled(FpElement{ctx_->inv(lead_coeff())});
}

Polynomial Polynomial::scaled(FpElement c) const {
  Polynomial out(ctx_);
  if (c.value % ctx_->p() == 0) return out;
  out.mons_ = mons_;
  out.coeffs_ = coeffs_;
  simd::kernels().scale_coeffs(out.coeffs_.data(), out.size(), c.value % ctx_->p(), ctx_->p());
  return out;
}

Polynomial Polynomial::shifted(const Monomial& m) const { return shifted_scaled(m, 1); }

Polynomial Polynomial::shifted_scaled(const Monomial& m, std::uint32_t c) const {
  return PolyBuilder::shift_scale(*this, m, c % ctx_->p());
}

Polynomial Polynomial::frobenius(std::uint32_t k) const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= ctx_->p();
    if (q > kMaxExponent && !is_constant()) throw ExponentOverflow("Frobenius twist exceeds 2^24-1");
    if (q > kMaxExponent) break;
  }
  if (is_constant()) return *this;
  Polynomial out(ctx_);
  out.mons_.reserve(size());
  for (const auto& m : mons_) {
    Monomial t;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::uint64_t v = m.e[i] * q;
      if (v > kMaxExponent) throw ExponentOverflow("Frobenius twist exceeds 2^24-1");
      t.e[i] = static_cast<std::uint32_t>(v);
    }
    out.mons_.push_back(t);
  }
  // Scaling every exponent by q preserves grevlex order.
  out.coeffs_ = coeffs_;
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  f.check_same(g);
  return PolyBuilder::combine(f, g, false);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  f.check_same(g);
  return PolyBuilder::combine(f, g, true);
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  out.mons_ = mons_;
  out.coeffs_.reserve(size());
  for (auto c : coeffs_) out.coeffs_.push_back(ctx_->neg(c));
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same(g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ctx_);
  // Recurse over the shorter factor; each leaf is one SIMD row.
  if (f.size() <= g.size()) return PolyBuilder::mul_range(f, 0, f.size(), g);
  return PolyBuilder::mul_range(g, 0, g.size(), f);
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return f.ctx_->same_as(*g.ctx_) && f.mons_ == g.mons_ && f.coeffs_ == g.coeffs_;
}

Polynomial Polynomial::sub_mul(std::uint32_t c, const Monomial& m, const Polynomial& g) const {
  check_same(g);
  return PolyBuilder::combine(*this, PolyBuilder::shift_scale(g, m, c % ctx_->p()), true);
}

Polynomial pow_binary(const Polynomial& f, std::uint64_t r) {
  Polynomial result = Polynomial::constant(f.context(), 1);
  Polynomial base = f;
  while (r) {
    if (r & 1U) result = result * base;
    r >>= 1U;
    if (r) base = base * base;
  }
  return result;
}

Polynomial pow(const Polynomial& f, std::uint64_t r) {
  if (r == 0) return Polynomial::constant(f.context(), 1);
  if (f.is_zero() || r == 1) return f;
  const std::uint32_t p = f.ring().p();
  if (f.is_monomial()) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (f.lead().e[i] && r > kMaxExponent / f.lead().e[i])
        throw ExponentOverflow("power exceeds 2^24-1 in some variable");
      m.e[i] = static_cast<std::uint32_t>(f.lead().e[i] * r);
    }
    std::uint64_t c = 1;
    std::uint64_t b = f.lead_coeff();
    for (std::uint64_t e = r; e; e >>= 1U, b = b * b % p)
      if (e & 1U) c = c * b % p;
    return Polynomial::term(f.context(), m, FpElement{static_cast<std::uint32_t>(c)});
  }
  if (f.degree() && r > kMaxExponent) throw ExponentOverflow("power exceeds 2^24-1");
  Polynomial result = Polynomial::constant(f.context(), 1);
  std::uint32_t k = 0;
  while (r) {
    auto digit = static_cast<std::uint32_t>(r % p);
    if (digit) result = result * pow_binary(f, digit).frobenius(k);
    r /= p;
    ++k;
  }
  return result;
}

Polynomial pow(const Polynomial& f, const BigInt& r) { return pow(f, to_u64(r, "exponent")); }

}  // namespace fjump
