#include "fjump/digits.hpp"

#include <map>
#include <unordered_map>

#include "fjump/error.hpp"

namespace fjump {

BasePExpansion expand(const Rational& s, std::uint32_t p) {
  if (s.sign() < 0) throw DomainError("expansion needs s >= 0");
  if (p < 2) throw DomainError("base must be at least 2");
  BasePExpansion out;
  out.p = p;
  out.integer_part = s.floor();
  BigInt rem = s.num() - out.integer_part * s.den();
  if (rem == 0) return out;
  const BigInt& den = s.den();
  std::map<BigInt, std::size_t> seen;  // remainder -> digit index it starts
  std::vector<std::uint32_t> digits;
  while (true) {
    if (rem == 0) {
      out.preperiod = digits;
      out.period = {0};
      return out;
    }
    auto [it, fresh] = seen.emplace(rem, digits.size());
    if (!fresh) {
      out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return out;
    }
    rem *= p;
    digits.push_back(static_cast<std::uint32_t>(rem / den));
    rem %= den;
  }
}

Rational frac_mod(const Rational& s, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  BigInt k = floor_div(s.num(), s.den() * m);
  return s - Rational(k * m);
}

OrbitReport orbit(const Rational& s, std::uint32_t p, const BigInt& m) {
  if (m < 1) throw DomainError("modulus must be >= 1");
  if (s.sign() < 0 || s >= Rational(m)) throw DomainError("orbit start " + s.str() + " not in [0, m)");
  OrbitReport rep{s, m, {}, 0, 0};
  std::map<std::pair<BigInt, BigInt>, std::size_t> index;
  Rational t = s;
  while (true) {
    auto [it, fresh] = index.emplace(std::make_pair(t.num(), t.den()), rep.orbit.size());
    if (!fresh) {
      rep.entry_index = it->second;
      rep.cycle_length = rep.orbit.size() - it->second;
      return rep;
    }
    rep.orbit.push_back(t);
    t = frac_mod(t * Rational(static_cast<std::int64_t>(p)), m);
  }
}

Reconstruction reconstruct(const BasePExpansion& exp) {
  const BigInt p = exp.p;
  auto as_int = [&](const std::vector<std::uint32_t>& ds) {
    BigInt v = 0;
    for (auto d : ds) {
      if (d >= exp.p) throw DomainError("digit out of range for base " + p.str());
      v = v * p + d;
    }
    return v;
  };
  Rational value(exp.integer_part);
  if (!exp.period.empty() || !exp.preperiod.empty()) {
    if (exp.period.empty()) throw DomainError("nonzero fraction needs a nonempty period");
    BigInt pk = ipow(p, exp.preperiod.size());
    BigInt cyc = ipow(p, exp.period.size()) - 1;
    value = value + Rational(as_int(exp.preperiod) * cyc + as_int(exp.period), pk * cyc);
  }
  Reconstruction r{value, CanonicalForm{0, 0, 1}};
  if (value.sign() > 0) r.form = canonicalize(value, exp.p);
  return r;
}

BasePExpansion shift_digits(const BasePExpansion& exp, std::size_t k) {
  BasePExpansion out;
  out.p = exp.p;
  out.integer_part = 0;
  if (exp.period.empty()) return out;
  std::vector<std::uint32_t> pre = exp.preperiod;
  std::vector<std::uint32_t> per = exp.period;
  for (std::size_t i = 0; i < k; ++i) {
    if (!pre.empty()) {
      pre.erase(pre.begin());
    } else {
      per.push_back(per.front());
      per.erase(per.begin());
    }
  }
  out.preperiod = pre;
  out.period = per;
  if (out.preperiod.empty() && out.period == std::vector<std::uint32_t>{0}) out.period.clear();
  return out;
}

}  // namespace fjump
