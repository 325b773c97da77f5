#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fjump/ideal.hpp"

namespace fjump {

/// f = sum over residues lambda in [0, p^e)^n of g_lambda^{p^e} * x^lambda.
struct FrobeniusDecomposition {
  std::uint32_t e = 0;
  /// (lambda, g_lambda) with g_lambda != 0, sorted by lambda in lex order.
  std::vector<std::pair<Monomial, Polynomial>> parts;
};

FrobeniusDecomposition frobenius_decompose(const Polynomial& f, std::uint32_t e);

/// Inverse of frobenius_decompose: sum of g_lambda^{p^e} x^lambda.
Polynomial frobenius_reassemble(const FrobeniusDecomposition& d, const RingPtr& ctx);

/// I_e(f): the smallest ideal J with f in J^{[p^e]}, generated by the parts g_lambda.
Ideal frobenius_root_poly(const Polynomial& f, std::uint32_t e);

/// I_e(I) as the sum of I_e over the generators of I.
Ideal frobenius_root_ideal(const Ideal& I, std::uint32_t e);

/// Checks I_e(I)^{[p^e]} ⊇ I.
bool verify_star(const Ideal& I, std::uint32_t e);

}  // namespace fjump
