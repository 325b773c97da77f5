#include "fjump/ring.hpp"

#include <cctype>
#include <set>

#include "fjump/error.hpp"
#include "fjump/monomial.hpp"

namespace fjump {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const RingContext> RingContext::make(std::uint32_t p, std::vector<std::string> vars) {
  if (p >= (1U << 16)) throw DomainError("characteristic " + std::to_string(p) + " must be below 2^16");
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (vars.empty() || vars.size() > kMaxVars)
    throw DomainError("need between 1 and 8 variables, got " + std::to_string(vars.size()));
  std::set<std::string> seen;
  for (const auto& v : vars) {
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char ch : v) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw DomainError("variable name '" + v + "' is not an ASCII identifier");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  return std::shared_ptr<const RingContext>(new RingContext(p, std::move(vars)));
}

std::uint32_t RingContext::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = p_ - 2;
  while (e) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace fjump
