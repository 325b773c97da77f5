#include <atomic>
#include <cstdlib>
#include <string_view>

#include "fjump/simd/kernels.hpp"

namespace fjump::simd {

#ifndef FJUMP_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

namespace {

const KernelTable* initial_table() {
  const char* env = std::getenv("FJUMP_SIMD");
  if (env && std::string_view(env) == "scalar") return &scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable& kernels() { return *active().load(std::memory_order_acquire); }

bool force_isa(Isa isa) {
  const KernelTable* t = isa == Isa::avx2 ? avx2_kernels() : &scalar_kernels();
  if (!t) return false;
  active().store(t, std::memory_order_release);
  return true;
}

}  // namespace fjump::simd
