// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "fjump/simd/kernels.hpp"

namespace fjump::simd {
namespace {

inline __m256i load(const Monomial& m) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(m.e.data()));
}
inline void store(Monomial& m, __m256i v) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(m.e.data()), v);
}

// Four coefficients times scale, reduced mod p. Inputs < p < 2^16, so the
// product is an exact integer in double precision.
inline __m128i mulmod4(__m128i c, __m256d scale, __m256d pd, __m256d pinv) {
  __m256d x = _mm256_mul_pd(_mm256_cvtepi32_pd(c), scale);
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, pd));
  // floor(x * pinv) may be off by one in either direction
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, pd));
  __m256d big = _mm256_cmp_pd(r, pd, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(big, pd));
  return _mm256_cvtpd_epi32(r);
}

void scale_block(const std::uint32_t* in, std::uint32_t* out, std::size_t n, std::uint32_t scale,
                 std::uint32_t p) {
  const __m256d sd = _mm256_set1_pd(static_cast<double>(scale));
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), mulmod4(c, sd, pd, pinv));
  }
  for (; i < n; ++i)
    out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(in[i]) * scale % p);
}

bool shift_scale(const Monomial* in_m, const std::uint32_t* in_c, std::size_t n,
                 const Monomial& shift, std::uint32_t scale, std::uint32_t p, Monomial* out_m,
                 std::uint32_t* out_c) {
  const __m256i s = load(shift);
  const __m256i cap = _mm256_set1_epi32(static_cast<int>(kMaxExponent));
  __m256i over = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; ++i) {
    __m256i v = _mm256_add_epi32(load(in_m[i]), s);
    over = _mm256_or_si256(over, _mm256_cmpgt_epi32(v, cap));
    store(out_m[i], v);
  }
  scale_block(in_c, out_c, n, scale, p);
  return _mm256_testz_si256(over, over) != 0;
}

std::size_t find_divisor(const Monomial& m, const Monomial* candidates, std::size_t n) {
  const __m256i target = load(m);
  for (std::size_t i = 0; i < n; ++i) {
    __m256i gt = _mm256_cmpgt_epi32(load(candidates[i]), target);
    if (_mm256_testz_si256(gt, gt)) return i;
  }
  return n;
}

void frobenius_split(const Monomial* in, std::size_t n, std::uint32_t q, Monomial* quot,
                     Monomial* rem) {
  // Lanes are < 2^24, exact in single precision; the float quotient is off by
  // at most one and gets corrected from the integer remainder.
  const __m256i qi = _mm256_set1_epi32(static_cast<int>(q));
  const __m256 qinv = _mm256_set1_ps(1.0F / static_cast<float>(q));
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; ++i) {
    __m256i v = load(in[i]);
    __m256i d = _mm256_cvttps_epi32(_mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(v), qinv)));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(d, qi));
    __m256i neg = _mm256_cmpgt_epi32(zero, r);
    d = _mm256_sub_epi32(d, _mm256_and_si256(neg, one));
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, qi));
    __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(qi, one));
    d = _mm256_add_epi32(d, _mm256_and_si256(big, one));
    r = _mm256_sub_epi32(r, _mm256_and_si256(big, qi));
    store(quot[i], d);
    store(rem[i], r);
  }
}

void scale_coeffs(std::uint32_t* c, std::size_t n, std::uint32_t scale, std::uint32_t p) {
  scale_block(c, c, n, scale, p);
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::avx2, "avx2", shift_scale, find_divisor, frobenius_split,
                                 scale_coeffs};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
}

}  // namespace fjump::simd
