#include <doctest.h>

#include "fjump/digits.hpp"
#include "fjump/error.hpp"
#include "fjump/test_ideal.hpp"
#include "support/gen.hpp"

using namespace fjump;
using namespace fjump::testing;

namespace {
Rational Q(const char* s) { return Rational::parse(s); }
using Digits = std::vector<std::uint32_t>;
}  // namespace

TEST_CASE("expansions") {
  auto a = expand(Q("1/3"), 2);
  CHECK(a.integer_part == 0);
  CHECK(a.preperiod.empty());
  CHECK(a.period == Digits{0, 1});
  auto b = expand(Q("1/2"), 2);
  CHECK(b.preperiod == Digits{1});
  CHECK(b.period == Digits{0});
  auto c = expand(Q("5"), 3);
  CHECK(c.integer_part == 5);
  CHECK(c.preperiod.empty());
  CHECK(c.period.empty());
  auto d = expand(Q("17/12"), 5);
  CHECK(d.integer_part == 1);
  CHECK(reconstruct(d).value == Q("17/12"));
}

TEST_CASE("frac_mod") {
  CHECK(frac_mod(Q("7/3"), 1) == Q("1/3"));
  CHECK(frac_mod(Q("1/3"), 1) == Q("1/3"));
  CHECK(frac_mod(Q("5/2"), 2) == Q("1/2"));
  CHECK(frac_mod(Q("-1/3"), 1) == Q("2/3"));
  CHECK(frac_mod(Q("4"), 2) == Q("0"));
}

TEST_CASE("orbits") {
  auto o = orbit(Q("1/3"), 2, 1);
  CHECK(o.orbit == std::vector<Rational>{Q("1/3"), Q("2/3")});
  CHECK(o.cycle_length == 2);
  CHECK(o.entry_index == 0);
  auto z = orbit(Q("0"), 3, 1);
  CHECK(z.orbit == std::vector<Rational>{Q("0")});
  CHECK(z.cycle_length == 1);
  auto h = orbit(Q("1/2"), 2, 1);
  CHECK(h.orbit == std::vector<Rational>{Q("1/2"), Q("0")});
  CHECK(h.entry_index == 1);
  CHECK(h.cycle_length == 1);
  CHECK_THROWS_AS(orbit(Q("3/2"), 2, 1), DomainError);
}

TEST_CASE("reconstruction") {
  BasePExpansion e{2, 0, {}, {0, 1}};
  auto r = reconstruct(e);
  CHECK(r.value == Q("1/3"));
  CHECK(r.form == CanonicalForm{1, 0, 2});
  CHECK(reconstruct(BasePExpansion{2, 0, {1}, {0}}).value == Q("1/2"));
  auto nines = reconstruct(BasePExpansion{3, 0, {}, {2}});
  CHECK(nines.value == Q("1"));
  CHECK(nines.form == CanonicalForm{2, 0, 1});
  CHECK(reconstruct(BasePExpansion{5, 0, {}, {}}).form == CanonicalForm{0, 0, 1});
}

TEST_CASE("round trips, orbit bounds, shift coherence") {
  Gen g(51);
  for (int i = 0; i < 500; ++i) {
    std::uint32_t p = g.pick(std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13});
    Rational s(static_cast<std::int64_t>(g.uniform(0, 2000)), static_cast<std::int64_t>(g.uniform(1, 300)));
    BasePExpansion e = expand(s, p);
    CHECK(reconstruct(e).value == s);
    CHECK(reconstruct(e).form.value(p) == (s.is_zero() ? Q("0") : s));

    Rational unit = frac_mod(s, 1);
    CHECK(orbit(unit, p, 1).orbit.size() <= unit.den());
    BigInt m = g.uniform(1, 4);
    Rational t = frac_mod(s, m);
    CHECK(BigInt(orbit(t, p, m).orbit.size()) <= m * t.den());

    auto k = g.uniform(0, 6);
    Rational shifted = frac_mod(s * Rational(ipow(BigInt(p), k)), 1);
    BasePExpansion tail = shift_digits(e, k);
    CHECK(reconstruct(tail).value == shifted);
  }
}

TEST_CASE("jump sets are closed under c -> {p c}") {
  for (auto [p, text] : std::vector<std::pair<std::uint32_t, const char*>>{
           {7, "x^2+y^3"}, {5, "x^3+y^4"}, {2, "x^2+y^3"}, {3, "x^2*y^3"}}) {
    auto R = ring(p);
    JumpReport rep = enumerate_jumps(P(R, text), Q("1"));
    REQUIRE(rep.complete());
    for (const auto& j : rep.jumps) {
      Rational next = frac_mod(j.c * Rational(static_cast<std::int64_t>(p)), 1);
      if (next.is_zero()) continue;
      CHECK_MESSAGE(is_jumping(rep.f, next).jumping, text, " p=", p, " c=", j.c);
    }
  }
}
