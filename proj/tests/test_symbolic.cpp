#include <doctest.h>
#include "support.hpp"

#include "diffsig/symbolic_powers.hpp"

using namespace diffsig;
using namespace diffsig::testing;

namespace {

Ideal poly_ideal(const RingPresentation& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(r.parse(g));
  return Ideal(r.field(), r.nvars(), ps);
}

}  // namespace

TEST_CASE("basic symbolic powers") {
  auto r = ring_q({"x", "y", "z"}, {});
  CHECK(symbolic_power(poly_ideal(r, {"x"}), 3) == poly_ideal(r, {"x^3"}));
  CHECK(symbolic_power(poly_ideal(r, {"x", "y"}), 2) == poly_ideal(r, {"x", "y"}).pow(2));
  Ideal j = poly_ideal(r, {"x*y", "x*z", "y*z"});
  CHECK(symbolic_power(j, 1) == j);
  Ideal j2 = symbolic_power(j, 2);
  CHECK(j2.contains(r.parse("x*y*z")));
  CHECK_FALSE(j.pow(2).contains(r.parse("x*y*z")));
}

TEST_CASE("squarefree monomial ideals match the prime-power oracle") {
  auto r = ring_q({"x", "y", "z"}, {});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x*y", "x*z", "y*z"}, {"x*y*z"}, {"x*y", "z"}, {"x", "y", "z"}, {"x*y", "y*z"}}) {
    Ideal j = poly_ideal(r, gens);
    auto primes = squarefree_minimal_primes(j);
    for (unsigned n = 1; n <= 3; ++n) CHECK(symbolic_power(j, n) == intersect_powers(primes, n));
  }
}

TEST_CASE("containments J^n in J^(n) in J") {
  auto r = ring_q({"x", "y", "z"}, {});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x*y", "x*z", "y*z"}, {"x^2 - y*z", "x*y - z^2"}, {"x*y - z^2"}}) {
    Ideal j = poly_ideal(r, gens);
    for (unsigned n = 1; n <= 3; ++n) {
      Ideal s = symbolic_power(j, n);
      CHECK(s.contains(j.pow(n)));
      CHECK(j.contains(s));
    }
  }
}

TEST_CASE("intersection compatibility") {
  auto r = ring_q({"x", "y", "z"}, {});
  Ideal a = poly_ideal(r, {"x", "y"});
  Ideal b = poly_ideal(r, {"y", "z"});
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(symbolic_power(ideal_intersection(a, b), n) == ideal_intersection(symbolic_power(a, n), symbolic_power(b, n)));
}

TEST_CASE("works in characteristic p") {
  auto r = ring_p(3, {"x", "y", "z"}, {});
  Ideal j = poly_ideal(r, {"x*y", "x*z", "y*z"});
  CHECK(symbolic_power(j, 2) == intersect_powers(squarefree_minimal_primes(j), 2));
}

TEST_CASE("minimal primes of squarefree monomial ideals") {
  auto r = ring_q({"x", "y", "z"}, {});
  CHECK(squarefree_minimal_primes(poly_ideal(r, {"x*y", "x*z", "y*z"})).size() == 3);
  CHECK(squarefree_minimal_primes(poly_ideal(r, {"x*y*z"})).size() == 3);
  CHECK(squarefree_minimal_primes(poly_ideal(r, {"x*y", "z"})).size() == 2);
  CHECK_THROWS_AS(squarefree_minimal_primes(poly_ideal(r, {"x^2"})), DomainError);
  CHECK_THROWS_AS(squarefree_minimal_primes(poly_ideal(r, {"x + y"})), DomainError);
}
