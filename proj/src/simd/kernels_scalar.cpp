#include "fjump/simd/kernels.hpp"

namespace fjump::simd {
namespace {

bool shift_scale(const Monomial* in_m, const std::uint32_t* in_c, std::size_t n,
                 const Monomial& shift, std::uint32_t scale, std::uint32_t p, Monomial* out_m,
                 std::uint32_t* out_c) {
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      std::uint32_t s = in_m[i].e[k] + shift.e[k];
      ok &= s <= kMaxExponent;
      out_m[i].e[k] = s;
    }
    out_c[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(in_c[i]) * scale % p);
  }
  return ok;
}

std::size_t find_divisor(const Monomial& m, const Monomial* candidates, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (divides(candidates[i], m)) return i;
  return n;
}

void frobenius_split(const Monomial* in, std::size_t n, std::uint32_t q, Monomial* quot,
                     Monomial* rem) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      quot[i].e[k] = in[i].e[k] / q;
      rem[i].e[k] = in[i].e[k] % q;
    }
}

void scale_coeffs(std::uint32_t* c, std::size_t n, std::uint32_t scale, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    c[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c[i]) * scale % p);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, "scalar", shift_scale, find_divisor,
                                 frobenius_split, scale_coeffs};
  return table;
}

}  // namespace fjump::simd
