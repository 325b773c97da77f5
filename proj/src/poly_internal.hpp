#pragma once

#include <span>
#include <vector>

#include "fjump/polynomial.hpp"

namespace fjump::detail {

/// a +/- b for two grevlex-descending term runs; zero sums dropped.
void merge_terms(const RingContext& ctx, std::span<const Monomial> am,
                 std::span<const std::uint32_t> ac, std::span<const Monomial> bm,
                 std::span<const std::uint32_t> bc, bool subtract, std::vector<Monomial>& om,
                 std::vector<std::uint32_t>& oc);

}  // namespace fjump::detail
