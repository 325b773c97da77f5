#include <doctest.h>

#include "fjump/canonical.hpp"
#include "fjump/error.hpp"
#include "fjump/frobenius.hpp"
#include "fjump/test_ideal.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace fjump;
using namespace fjump::testing;

namespace {

Rational Q(const char* s) { return Rational::parse(s); }

// tau(f^c) straight from the ascending chain I_e(f^{ceil(c p^e)}), read off once
// `window` consecutive terms agree.
Ideal tau_by_definition(const Polynomial& f, const Rational& c, std::uint32_t e_max, std::uint32_t window = 3) {
  std::uint32_t p = f.ring().p();
  std::optional<Ideal> last;
  std::uint32_t same = 0;
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    Ideal cur = frobenius_root_poly(pow(f, ceil_mul(c, p, e)), e);
    same = last && ideal_equal(*last, cur) ? same + 1 : 0;
    last = cur;
    if (same + 1 >= window) break;
  }
  return *last;
}

}  // namespace

TEST_CASE("ceil_mul") {
  CHECK(ceil_mul(Q("5/6"), 7, 1) == 6);
  CHECK(ceil_mul(Q("1/2"), 3, 2) == 5);
  CHECK(ceil_mul(Q("2"), 2, 3) == 16);
  CHECK(ceil_mul(Q("0"), 5, 4) == 0);
}

TEST_CASE("canonical forms") {
  CHECK(canonicalize(Q("5/6"), 7) == CanonicalForm{5, 0, 1});
  CHECK(canonicalize(Q("1"), 2) == CanonicalForm{1, 0, 1});
  CHECK(canonicalize(Q("1/2"), 3) == CanonicalForm{1, 0, 1});
  CHECK(canonicalize(Q("1/3"), 2) == CanonicalForm{1, 0, 2});
  CHECK(canonicalize(Q("3/4"), 2) == CanonicalForm{3, 2, 1});
  CHECK(canonicalize(Q("7/12"), 5).value(5) == Q("7/12"));
  CHECK_THROWS_AS(canonicalize(Q("0"), 2), DomainError);
  CHECK(canonicalize_euler(Q("1/7"), 2).beta == 6);
  CHECK(canonicalize(Q("1/7"), 2).beta == 3);
  CHECK(is_p_adic(Q("5/8"), 2));
  CHECK_FALSE(is_p_adic(Q("5/6"), 2));
}

TEST_CASE("canonical form reconstructs c for random c") {
  Gen g(41);
  for (int i = 0; i < 300; ++i) {
    std::uint32_t p = g.pick(std::vector<std::uint32_t>{2, 3, 5, 7, 11});
    Rational c(static_cast<std::int64_t>(g.uniform(1, 500)), static_cast<std::int64_t>(g.uniform(1, 200)));
    CanonicalForm cf = canonicalize(c, p);
    CHECK(cf.value(p) == c);
    CanonicalForm ce = canonicalize_euler(c, p);
    CHECK(ce.value(p) == c);
    CHECK(ce.beta % cf.beta == 0);
  }
}

TEST_CASE("tau at p-adic exponents") {
  auto R1 = ring(2, {"x"});
  CHECK(tau_dyadic(P(R1, "x"), 3, 1) == I(R1, {"x"}));
  CHECK(tau_dyadic(P(R1, "x"), 0, 4).is_unit());
  auto R = ring(2);
  CHECK(tau_dyadic(P(R, "x^2+y^3"), 1, 1) == I(R, {"x", "y"}));
  CHECK_THROWS_AS(tau_dyadic(Polynomial::zero(R), 1, 1), DomainError);
}

TEST_CASE("phi step") {
  auto R = ring(2, {"x"});
  CHECK(phi_step(P(R, "x"), 1, 1, Ideal::unit(R)).is_unit());
  CHECK(phi_step(P(R, "x"), 3, 1, Ideal::unit(R)) == I(R, {"x"}));
  CHECK(phi_step(P(R, "x"), 3, 1, I(R, {"x"})) == I(R, {"x^2"}));
}

TEST_CASE("left limits and values") {
  auto R1 = ring(2, {"x"});
  CHECK(tau_left_limit(P(R1, "x"), Q("1")).is_unit());
  CHECK(tau(P(R1, "x"), Q("1")) == I(R1, {"x"}));
  CHECK(tau(P(R1, "x^3"), Q("2/3")) == I(R1, {"x^2"}));
  CHECK(tau_left_limit(P(R1, "x^3"), Q("2/3")) == I(R1, {"x"}));
  auto R7 = ring(7);
  Polynomial cusp = P(R7, "x^2+y^3");
  CHECK(tau(cusp, Q("5/6")) == I(R7, {"x", "y"}));
  CHECK(tau_left_limit(cusp, Q("5/6")).is_unit());
  CHECK(tau(cusp, Q("1")) == I(R7, {"x^2+y^3"}));
  CHECK(tau_left_limit(cusp, Q("1")) == I(R7, {"x", "y"}));
  CHECK(is_jumping(cusp, Q("5/6")).jumping);
  CHECK_FALSE(is_jumping(cusp, Q("4/5")).jumping);
  CHECK_THROWS_AS(tau(cusp, Q("-1")), DomainError);
  CHECK_THROWS_AS(tau_left_limit(cusp, Q("0")), DomainError);
  CHECK(tau(cusp, Q("0")).is_unit());
}

TEST_CASE("tau agrees with the defining chain") {
  Gen g(42);
  for (std::uint32_t p : {2u, 3u}) {
    auto R = ring(p);
    for (int i = 0; i < 12; ++i) {
      Polynomial f = g.singular_poly(R, 3, 4);
      Rational c(static_cast<std::int64_t>(g.uniform(1, 12)), static_cast<std::int64_t>(g.uniform(2, 9)));
      CHECK_MESSAGE(tau(f, c) == tau_by_definition(f, c, 9), format_poly(f), " at ", c);
    }
  }
}

TEST_CASE("split route equals the literal Phi chain") {
  // gamma = a/(p^beta-1) not an integer: the literal chain from (f^b), b = ceil(gamma),
  // with the full a gives tau(f^gamma); the literal chain from (1) gives the left limit.
  Gen g(43);
  for (std::uint32_t p : {2u, 3u}) {
    auto R = ring(p);
    for (int i = 0; i < 15; ++i) {
      Polynomial f = g.singular_poly(R, 3, 4);
      auto beta = static_cast<std::uint32_t>(g.uniform(1, 2));
      BigInt m = ipow(BigInt(p), beta) - 1;
      BigInt a = g.uniform(1, 3 * static_cast<std::uint64_t>(m));
      Rational gamma(a, m);
      auto fixed = [&](Ideal J) {
        for (int s = 0; s < 64; ++s) {
          Ideal next = phi_step(f, a, beta, J);
          if (next == J) return J;
          J = next;
        }
        FAIL("no fixed point");
        return J;
      };
      CHECK(fixed(Ideal::unit(R)) == tau_left_limit(f, gamma));
      if (!gamma.is_integer()) CHECK(fixed(Ideal::principal(pow(f, gamma.ceil()))) == tau(f, gamma));
    }
  }
}

TEST_CASE("left limit pulls back through I_1") {
  Gen g(44);
  auto R = ring(3);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = g.singular_poly(R, 3, 4);
    Rational c(static_cast<std::int64_t>(g.uniform(1, 20)), static_cast<std::int64_t>(g.uniform(1, 8)) * 3);
    Rational pc = c * Rational(3);
    CHECK(tau_left_limit(f, c) == frobenius_root_ideal(tau_left_limit(f, pc), 1));
    CHECK(tau(f, c) == frobenius_root_ideal(tau(f, pc), 1));
  }
}

TEST_CASE("root_power_times matches the direct power") {
  Gen g(45);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = ring(p);
    for (int i = 0; i < 10; ++i) {
      Polynomial f = g.nonzero_poly(R, 3, 3);
      Ideal J = g.ideal(R, 2, 2, 3);
      auto r = g.uniform(0, 80);
      auto e = static_cast<std::uint32_t>(g.uniform(0, 3));
      Ideal direct = e == 0 ? ideal_scale(pow(f, r), J) : frobenius_root_ideal(ideal_scale(pow(f, r), J), e);
      CHECK(root_power_times(f, r, J, e) == direct);
    }
  }
}

TEST_CASE("nu") {
  auto R = ring(7);
  Polynomial cusp = P(R, "x^2+y^3");
  Ideal m = Ideal::maximal(R);
  // fpt = 5/6 lies in (nu/p^e, (nu+1)/p^e] for every e.
  BigInt q = 1;
  for (std::uint32_t e = 1; e <= 3; ++e) {
    q *= 7;
    BigInt n = nu(cusp, m, e);
    CHECK(Rational(n, q) < Q("5/6"));
    CHECK(Q("5/6") <= Rational(n + 1, q));
  }
  CHECK(nu(P(R, "x"), I(R, {"x"}), 2) == 48);
  CHECK(nu(P(R, "x^7"), I(R, {"x"}), 1) == 0);
  CHECK(nu(P(R, "x"), I(R, {"x^2"}), 1) == 13);
  CHECK_THROWS_AS(nu(cusp, Ideal::unit(R), 1), DomainError);
  CHECK_THROWS_AS(nu(P(R, "x+1"), m, 1), BudgetExceeded);
}

TEST_CASE("enumerating jumps") {
  auto R = ring(7);
  JumpReport rep = enumerate_jumps(P(R, "x^2+y^3"), Q("1"));
  REQUIRE(rep.complete());
  REQUIRE(rep.jumps.size() == 2);
  CHECK(rep.jumps[0].c == Q("5/6"));
  CHECK(rep.jumps[1].c == Q("1"));
  CHECK(rep.jumps[0].tau_left.is_unit());
  CHECK(rep.jumps[0].tau_at == rep.jumps[1].tau_left);
  CHECK(check_scaling_law(rep.f, rep).ok());

  CHECK_THROWS_AS(enumerate_jumps(P(R, "3"), Q("1")), DomainError);
  CHECK_THROWS_AS(enumerate_jumps(P(R, "x"), Q("0")), DomainError);
}

TEST_CASE("depth bounds completeness, never soundness") {
  auto R = ring(5);
  EnumerateOptions shallow;
  shallow.depth = 1;
  JumpReport rep = enumerate_jumps(P(R, "x^3+y^4"), Q("1"), shallow);
  for (const auto& j : rep.jumps) CHECK(is_jumping(rep.f, j.c).jumping);
  JumpReport deep = enumerate_jumps(P(R, "x^3+y^4"), Q("1"));
  CHECK(deep.complete());
  CHECK(deep.jumps.size() >= rep.jumps.size());
}

TEST_CASE("monomial jump sets match the floor formula") {
  for (std::uint32_t p : {2u, 3u}) {
    auto R = ring(p);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 3}, {1, 1}}) {
      Polynomial f = Polynomial::term(R, Monomial{{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}},
                                      FpElement{1});
      JumpReport rep = enumerate_jumps(f, Q("2"));
      std::vector<Rational> got;
      for (const auto& j : rep.jumps) got.push_back(j.c);
      CHECK(rep.complete());
      CHECK(got == monomial_jumps({a, b}, Q("2")));
    }
  }
}

TEST_CASE("evaluator is consistent with the free functions") {
  auto R = ring(3);
  Polynomial f = P(R, "x^2+y^3+x*y^2");
  TauEvaluator ev(f);
  for (const char* c : {"1/2", "2/3", "5/8", "1", "7/4"}) {
    CHECK(ev.tau(Q(c)) == tau(f, Q(c)));
    CHECK(ev.tau_left(Q(c)) == tau_left_limit(f, Q(c)));
    CHECK(ev.tau(Q(c)) == ev.tau(Q(c)));
  }
}
