#pragma once

// Data-parallel inner loops over packed monomials and F_p coefficient blocks.
// Every kernel has a portable scalar reference; an AVX2 variant is picked at
// runtime when the CPU supports it. Both must produce identical output.

#include <cstddef>
#include <cstdint>

#include "fjump/monomial.hpp"

namespace fjump::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  /// out_m[i] = in_m[i] * shift, out_c[i] = in_c[i] * scale mod p.
  /// Returns false when some lane exceeds kMaxExponent (outputs then unspecified).
  bool (*shift_scale)(const Monomial* in_m, const std::uint32_t* in_c, std::size_t n,
                      const Monomial& shift, std::uint32_t scale, std::uint32_t p,
                      Monomial* out_m, std::uint32_t* out_c);

  /// Index of the first candidate dividing m, or n when none does.
  std::size_t (*find_divisor)(const Monomial& m, const Monomial* candidates, std::size_t n);

  /// Lane-wise quot = in / q, rem = in % q (q >= 1).
  void (*frobenius_split)(const Monomial* in, std::size_t n, std::uint32_t q, Monomial* quot,
                          Monomial* rem);

  /// c[i] = c[i] * scale mod p, in place.
  void (*scale_coeffs)(std::uint32_t* c, std::size_t n, std::uint32_t scale, std::uint32_t p);
};

const KernelTable& scalar_kernels();
/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();

/// The table used by the library. Defaults to AVX2 when available unless the
/// environment variable FJUMP_SIMD=scalar is set.
const KernelTable& kernels();

/// Overrides the active table; returns false if the requested ISA is unavailable.
bool force_isa(Isa isa);

}  // namespace fjump::simd
