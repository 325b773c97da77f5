#include "fjump/frobenius.hpp"

#include <algorithm>
#include <unordered_map>

#include "fjump/error.hpp"
#include "fjump/simd/kernels.hpp"

namespace fjump {

namespace {

// p^e clamped to kMaxExponent + 1: beyond that every lane is its own residue.
std::uint32_t root_modulus(std::uint32_t p, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e && q <= kMaxExponent; ++i) q *= p;
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(q, kMaxExponent + 1ULL));
}

void add_parts(const Polynomial& f, std::uint32_t e, std::vector<Polynomial>& out) {
  for (auto& [lambda, g] : frobenius_decompose(f, e).parts) out.push_back(std::move(g));
}

}  // namespace

FrobeniusDecomposition frobenius_decompose(const Polynomial& f, std::uint32_t e) {
  if (e == 0) throw DomainError("Frobenius root needs e >= 1");
  FrobeniusDecomposition d;
  d.e = e;
  if (f.is_zero()) return d;
  const std::uint32_t q = root_modulus(f.ring().p(), e);
  const std::size_t n = f.size();
  std::vector<Monomial> quot(n);
  std::vector<Monomial> rem(n);
  simd::kernels().frobenius_split(f.monomials().data(), n, q, quot.data(), rem.data());

  struct Bucket {
    std::vector<Monomial> mons;
    std::vector<std::uint32_t> coeffs;
  };
  std::unordered_map<Monomial, Bucket, MonomialHash> buckets;
  for (std::size_t i = 0; i < n; ++i) {
    Bucket& b = buckets[rem[i]];
    b.mons.push_back(quot[i]);
    b.coeffs.push_back(f.coefficients()[i]);
  }
  d.parts.reserve(buckets.size());
  for (auto& [lambda, b] : buckets) {
    // Terms arrive in grevlex order and x^mu -> x^{floor(mu/q)} is order
    // preserving within one residue class, so each bucket is already canonical.
    d.parts.emplace_back(lambda,
                         Polynomial::from_canonical(f.context(), std::move(b.mons), std::move(b.coeffs)));
  }
  std::sort(d.parts.begin(), d.parts.end(),
            [](const auto& a, const auto& b) { return lex_cmp(a.first, b.first) < 0; });
  return d;
}

Polynomial frobenius_reassemble(const FrobeniusDecomposition& d, const RingPtr& ctx) {
  Polynomial sum = Polynomial::zero(ctx);
  for (const auto& [lambda, g] : d.parts) sum = sum + g.frobenius(d.e).shifted(lambda);
  return sum;
}

Ideal frobenius_root_poly(const Polynomial& f, std::uint32_t e) {
  std::vector<Polynomial> gens;
  add_parts(f, e, gens);
  return Ideal(f.context(), std::move(gens));
}

Ideal frobenius_root_ideal(const Ideal& I, std::uint32_t e) {
  if (e == 0) throw DomainError("Frobenius root needs e >= 1");
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) add_parts(g, e, gens);
  return Ideal(I.context(), std::move(gens));
}

bool verify_star(const Ideal& I, std::uint32_t e) {
  Ideal root = frobenius_root_ideal(I, e);
  return ideal_contains(bracket_power(root, ipow(BigInt(I.context()->p()), e)), I);
}

}  // namespace fjump
