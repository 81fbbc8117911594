#include <doctest.h>
#include "support.hpp"

#include <random>

using namespace diffsig;
using namespace diffsig::testing;

namespace {

Ideal make(const RingPresentation& r, const std::vector<std::string>& gens,
           MonomialOrder order = MonomialOrder::degrevlex()) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(r.parse(g));
  return Ideal(r.field(), r.nvars(), ps, order);
}

}  // namespace

TEST_CASE("lex basis of a zero-dimensional ideal") {
  auto r = ring_q({"x", "y"}, {});
  Ideal i = make(r, {"x^2 - 1", "x*y - 1"}, MonomialOrder::lex());
  auto gb = i.basis();
  CHECK(gb.size() == 2);
  CHECK(i.contains(r.parse("y^2 - 1")));
  CHECK(i.contains(r.parse("x - y")));
  CHECK(is_groebner_basis(gb, MonomialOrder::lex()));
  CHECK(is_reduced_basis(gb, MonomialOrder::lex()));
}

TEST_CASE("elimination of the cusp parametrization") {
  auto r = ring_q({"t", "x", "y"}, {});
  Ideal i = make(r, {"x - t^2", "y - t^3"});
  Ideal e = eliminate(i, {false, true, true});
  REQUIRE(e.generators().size() == 1);
  CHECK(Ideal(r.field(), 3, e.generators()) == make(r, {"x^3 - y^2"}));
}

TEST_CASE("intersection and quotient") {
  auto r = ring_q({"x", "y", "z"}, {});
  Ideal a = ideal_intersection(ideal_intersection(make(r, {"x", "y"}), make(r, {"x", "z"})), make(r, {"y", "z"}));
  CHECK(a == make(r, {"x*y", "x*z", "y*z"}));
  CHECK(ideal_quotient(make(r, {"x^2", "x*y"}), r.parse("x")) == make(r, {"x", "y"}));
  CHECK(ideal_quotient(make(r, {"x*y", "x*z"}), make(r, {"y", "z"})) == make(r, {"x"}));
  CHECK(ideal_quotient(make(r, {"x"}), r.parse("x")).is_unit());
}

TEST_CASE("module kernels") {
  auto r = ring_q({"x", "y"}, {});
  SUBCASE("Koszul syzygy") {
    PolyMatrix m{1, 2, {r.parse("x"), r.parse("y")}};
    auto k = module_kernel(m, {}, r.field(), 2);
    REQUIRE(k.generators.size() == 1);
    CHECK(k.generators[0][0] == r.parse("y"));
    CHECK(k.generators[0][1] == r.parse("-x"));
  }
  SUBCASE("annihilator over a quotient") {
    auto q = ring_q({"x", "y"}, {"x*y"});
    PolyMatrix m{1, 1, {q.parse("x")}};
    auto k = module_kernel(m, q.relations(), q.field(), 2);
    REQUIRE(k.generators.size() == 1);
    CHECK(k.generators[0][0] == q.parse("y"));
  }
}

TEST_CASE("budget exhaustion is reported") {
  auto r = ring_q({"x", "y", "z", "w"}, {});
  Ideal i = make(r, {"x^5 + y^4*z - w^3", "x*y^3 - z^4 + w", "y^5 - x^2*z*w + 1"});
  CHECK_THROWS_AS(i.basis(GroebnerOptions{2}), BudgetExhausted);
}

TEST_CASE("property: random ideals yield reduced confluent bases") {
  std::mt19937 rng(2024);
  auto r = ring_q({"x", "y", "z"}, {});
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(r, rng, 3, 3));
    for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
      Ideal i(r.field(), 3, gens, order);
      const auto& gb = i.basis();
      CHECK(is_groebner_basis(gb, order));
      CHECK(is_reduced_basis(gb, order));
      for (const auto& g : gens) CHECK(i.contains(g));
    }
  }
}

TEST_CASE("property: same basis in characteristic p") {
  std::mt19937 rng(7);
  auto r = ring_p(5, {"x", "y", "z"}, {});
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(r, rng, 3, 4));
    Ideal i(r.field(), 3, gens);
    CHECK(is_groebner_basis(i.basis(), i.order()));
  }
}

TEST_CASE("property: intersection and quotient identities") {
  std::mt19937 rng(99);
  auto r = ring_q({"x", "y", "z"}, {});
  auto mono = monomials_up_to_degree(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> ga, gb;
    for (int k = 0; k < 2; ++k) {
      ga.push_back(random_polynomial(r, rng, 2, 2));
      gb.push_back(random_polynomial(r, rng, 2, 2));
    }
    Ideal a(r.field(), 3, ga), b(r.field(), 3, gb);
    Ideal c = ideal_intersection(a, b);
    CHECK(a.contains(c));
    CHECK(b.contains(c));
    CHECK(c.contains(a * b));
    Polynomial f = random_polynomial(r, rng, 2, 2);
    if (f.is_zero()) continue;
    Ideal q = ideal_quotient(a, f);
    CHECK(q.contains(a));
    for (const auto& g : q.generators()) CHECK(a.contains(g * f));
  }
}
