#include <doctest.h>
#include "support.hpp"

#include <random>

using namespace diffsig;
using namespace diffsig::testing;

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK((f.from_int(3) * f.from_int(5)).to_string() == "1");
  CHECK((f.from_int(3).inverse() * f.from_int(3)).is_one());
  CHECK(f.from_int(-1).to_string() == "6");
  CHECK(f.from_rational(mpq_class(1, 2)).to_string() == "4");
  CHECK_THROWS_AS(f.from_int(0).inverse(), DomainError);
  CHECK_THROWS_AS(f.from_rational(mpq_class(1, 7)), DomainError);
  CHECK_THROWS_AS(Field::prime(6), DomainError);
  CHECK_THROWS_AS(Field::prime(1), DomainError);
}

TEST_CASE("rational field arithmetic") {
  Field q = Field::rationals();
  auto a = q.from_rational(mpq_class(2, 3));
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).is_zero());
  CHECK((a + q.from_int(1)).to_string() == "5/3");
}

TEST_CASE("parse and print round trip") {
  auto r = ring_q({"x", "y", "z"}, {});
  for (const char* text : {"x^2*y - 1/2*z + 3", "(x + y)^3", "-x + 2*y*z^4", "0", "7"}) {
    Polynomial p = r.parse(text);
    CHECK(r.parse(r.format(p)) == p);
  }
  CHECK(r.parse("(x+y)^2") == r.parse("x^2 + 2*x*y + y^2"));
  CHECK(r.parse("x*y - y*x").is_zero());
}

TEST_CASE("parser rejects malformed input") {
  auto r = ring_q({"x", "y"}, {});
  CHECK_THROWS_AS(r.parse("x y"), DomainError);
  CHECK_THROWS_AS(r.parse("xy"), DomainError);
  CHECK_THROWS_AS(r.parse("x^"), DomainError);
  CHECK_THROWS_AS(r.parse("(x + y"), DomainError);
  CHECK_THROWS_AS(r.parse("x / y"), DomainError);
  CHECK_THROWS_AS(r.parse("w"), DomainError);
}

TEST_CASE("ring presentation files") {
  auto r = load_ring_json(R"({"field": {"Fp": 5}, "vars": ["a", "b"], "relations": ["a^2 - b^2"]})");
  CHECK(r.field().characteristic() == 5);
  CHECK(r.nvars() == 2);
  CHECK(r.is_graded());
  auto w = load_ring_json(R"({"field": "Q", "vars": ["x", "y"], "relations": ["x^2 - y^3"], "weights": [3, 2]})");
  CHECK(w.is_graded());
  CHECK_FALSE(load_ring_json(R"({"field": "Q", "vars": ["x", "y"], "relations": ["x^2 - y^3"]})").is_graded());
  CHECK_THROWS_AS(load_ring_json(R"({"field": "R", "vars": ["x"], "relations": []})"), DomainError);
  CHECK_THROWS_AS(load_ring_json(R"({"field": "Q", "vars": ["x", "x"], "relations": []})"), DomainError);
  CHECK_THROWS_AS(load_ring_json("{not json"), DomainError);
  CHECK_THROWS_AS(load_ring_json(R"({"field": "Q", "vars": ["x"], "relations": [], "order": "weird"})"), DomainError);
}

TEST_CASE("divided power derivatives are integral in every characteristic") {
  auto r = ring_p(2, {"x", "y"}, {});
  // (1/2!) d_x^2 of x^3 y = 3 x y = x y over F_2.
  CHECK(divided_power_derivative(r.parse("x^3*y"), Monomial{2, 0}) == r.parse("x*y"));
  CHECK(divided_power_derivative(r.parse("x^2"), Monomial{2, 0}) == r.one());
  CHECK(divided_power_derivative(r.parse("x^2"), Monomial{1, 0}).is_zero());
}

TEST_CASE("taylor shift expands f(x + y)") {
  auto r = ring_q({"x", "y"}, {});
  std::mt19937 rng(11);
  auto big = ring_q({"x", "y", "u", "v"}, {});
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = random_polynomial(r, rng, 4, 5);
    Polynomial shifted = taylor_shift(f);
    // Substitute by composing: f(x + u, y + v) computed directly.
    std::vector<std::size_t> to_big{0, 1};
    Polynomial x = big.parse("x + u"), y = big.parse("y + v");
    Polynomial direct = big.zero();
    for (const auto& t : f.terms())
      direct += (x.pow(t.monomial[0]) * y.pow(t.monomial[1])).scaled(t.coeff);
    CHECK(shifted == direct);
  }
}

TEST_CASE("monomial enumeration order") {
  auto ms = monomials_up_to_degree(3, 2);
  REQUIRE(ms.size() == 10);
  CHECK(ms[0].is_one());
  CHECK(ms[1] == Monomial{1, 0, 0});
  CHECK(ms[4] == Monomial{2, 0, 0});
  CHECK(ms[9] == Monomial{0, 0, 2});
  CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("Krull dimension and multiplicity") {
  CHECK(krull_dimension(quadric(3)) == 2);
  CHECK(multiplicity(quadric(3)) == 2);
  CHECK(krull_dimension(ring_q({"x", "y", "z"}, {"x^3 + y^3 + z^3"})) == 2);
  CHECK(multiplicity(ring_q({"x", "y", "z"}, {"x^3 + y^3 + z^3"})) == 3);
  CHECK(krull_dimension(ring_q({"x", "y"}, {})) == 2);
  CHECK(multiplicity(ring_q({"x", "y"}, {})) == 1);
  CHECK(krull_dimension(ring_q({"a", "b", "c", "d"}, {"a*d - b*c"})) == 3);
  CHECK(multiplicity(ring_q({"a", "b", "c", "d"}, {"a*d - b*c"})) == 2);
}

TEST_CASE("graded quotient bases") {
  GradedQuotient q(quadric(3));
  CHECK(q.dimension(0) == 1);
  CHECK(q.dimension(1) == 3);
  CHECK(q.dimension(2) == 5);
  CHECK(q.dimension(5) == 11);
}
