#include <doctest.h>

#include <algorithm>
#include <thread>

#include "fjump/error.hpp"
#include "fjump/ideal.hpp"
#include "support/gen.hpp"

using namespace fjump;
using namespace fjump::testing;

namespace {
std::vector<std::string> gb(const Ideal& I) { return ideal_strings(I); }
}  // namespace

TEST_CASE("reduced bases") {
  auto R = ring(5);
  CHECK(gb(I(R, {"x", "x+y"})) == std::vector<std::string>{"x", "y"});
  CHECK(gb(I(R, {"x^2", "x*y"})) == std::vector<std::string>{"x^2", "x*y"});
  CHECK(gb(Ideal::zero(R)).empty());
  CHECK(gb(I(R, {"0"})).empty());
  CHECK(gb(I(R, {"x+1", "x"})) == std::vector<std::string>{"1"});
  CHECK(gb(I(R, {"2x+4y"})) == std::vector<std::string>{"x + 2*y"});
}

TEST_CASE("normal forms and membership") {
  auto R = ring(3);
  CHECK(normal_form(P(R, "x"), I(R, {"x", "y"})).is_zero());
  CHECK(normal_form(P(R, "1"), I(R, {"x", "y"})) == P(R, "1"));
  CHECK(normal_form(P(R, "x^2+y"), I(R, {"x^2"})) == P(R, "y"));
  CHECK(ideal_member(P(R, "x"), I(R, {"x", "y"})));
  CHECK_FALSE(ideal_member(P(R, "1"), I(R, {"x"})));
  CHECK(ideal_member(P(R, "x^2*y^2"), I(R, {"x^2"})));
}

TEST_CASE("containment and equality") {
  auto R = ring(2);
  CHECK(I(R, {"x", "y"}) == I(R, {"y", "x+y"}));
  CHECK(ideal_contains(I(R, {"x"}), I(R, {"x^2"})));
  CHECK_FALSE(ideal_contains(I(R, {"x^2"}), I(R, {"x"})));
  CHECK(ideal_contains(Ideal::unit(R), I(R, {"x^3+y+1", "y^7"})));
  CHECK(ideal_contains(I(R, {"x"}), Ideal::zero(R)));
}

TEST_CASE("sum, product, scale") {
  auto R = ring(7);
  CHECK(ideal_sum(I(R, {"x"}), I(R, {"y"})) == I(R, {"x", "y"}));
  CHECK(ideal_product(I(R, {"x"}), I(R, {"y"})) == I(R, {"x*y"}));
  CHECK(ideal_scale(P(R, "x"), I(R, {"x", "y"})) == I(R, {"x^2", "x*y"}));
  CHECK_THROWS_AS(ideal_sum(I(R, {"x"}), I(ring(5), {"y"})), ContextMismatch);
}

TEST_CASE("bracket powers") {
  auto R2 = ring(2);
  CHECK(bracket_power(I(R2, {"x", "y"}), 4) == I(R2, {"x^4", "y^4"}));
  auto R3 = ring(3);
  CHECK(bracket_power(I(R3, {"x+y"}), 3) == I(R3, {"x^3+y^3"}));
  CHECK(bracket_power(Ideal::unit(R3), 27).is_unit());
  CHECK(bracket_power(I(R3, {"x"}), 1) == I(R3, {"x"}));
  CHECK_THROWS_AS(bracket_power(I(R3, {"x"}), 6), DomainError);
  CHECK(log_p(BigInt(343), 7) == 3);
  CHECK(log_p(BigInt(344), 7) == -1);
}

TEST_CASE("basis does not depend on generator order or redundancy") {
  Gen g(21);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = ring(p, {"x", "y", "z"});
    for (int i = 0; i < 25; ++i) {
      Ideal J = g.ideal(R, 3, 3, 3);
      std::vector<Polynomial> gens = J.generators();
      std::shuffle(gens.begin(), gens.end(), g.engine());
      Polynomial combo = gens.front() * g.poly(R, 2, 2) + gens.back();
      gens.push_back(combo);
      Ideal K(R, gens);
      CHECK(ideal_strings(J) == ideal_strings(K));
    }
  }
}

TEST_CASE("equality is an equivalence, containment a partial order") {
  Gen g(22);
  auto R = ring(3);
  for (int i = 0; i < 30; ++i) {
    Ideal A = g.ideal(R, 2, 3, 3), B = g.ideal(R, 2, 3, 3);
    Ideal C = ideal_sum(A, B);
    CHECK(A == A);
    CHECK(ideal_contains(C, A));
    CHECK(ideal_contains(C, B));
    if (ideal_contains(A, B) && ideal_contains(B, A)) CHECK(A == B);
    Ideal D = ideal_product(A, B);
    CHECK(ideal_contains(A, D));
    CHECK(ideal_contains(C, D));
  }
}

TEST_CASE("bracket power is additive, multiplicative and generator independent") {
  Gen g(23);
  for (std::uint32_t p : {2u, 3u}) {
    auto R = ring(p);
    BigInt q = p;
    for (int i = 0; i < 20; ++i) {
      Ideal A = g.ideal(R, 2, 3, 3), B = g.ideal(R, 2, 3, 2);
      CHECK(bracket_power(ideal_sum(A, B), q) == ideal_sum(bracket_power(A, q), bracket_power(B, q)));
      CHECK(bracket_power(ideal_product(A, B), q) == ideal_product(bracket_power(A, q), bracket_power(B, q)));
      Ideal A2(R, A.reduced_gb());
      CHECK(bracket_power(A, q) == bracket_power(A2, q));
    }
  }
}

TEST_CASE("copies share the basis cache across threads") {
  auto R = ring(5, {"x", "y", "z"});
  Ideal J = I(R, {"x^3+y*z", "y^3+x*z", "z^3+x*y"});
  std::vector<std::thread> ts;
  std::vector<std::vector<std::string>> out(4);
  for (int t = 0; t < 4; ++t) ts.emplace_back([&, t] { out[t] = ideal_strings(Ideal(J)); });
  for (auto& t : ts) t.join();
  for (int t = 1; t < 4; ++t) CHECK(out[t] == out[0]);
}
