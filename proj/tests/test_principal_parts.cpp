#include <doctest.h>
#include "support.hpp"

#include <random>

using namespace diffsig;
using namespace diffsig::testing;

namespace {

std::vector<std::size_t> free_ranks(const RingPresentation& r, unsigned max_order) {
  std::vector<std::size_t> out;
  for (const auto& e : signature_sequence(r, max_order).entries) out.push_back(e.length);
  return out;
}

std::vector<RingPresentation> graded_fixtures() {
  return {
      ring_q({"x", "y"}, {}),
      quadric(3),
      ring_q({"x", "y", "z"}, {"z^2 - x*y"}),
      ring_q({"x", "y", "z"}, {"x^3 + y^3 + z^3"}),
      ring_q({"x", "y", "z"}, {"x^2 - y^2*z"}, {3, 2, 2}),
      ring_q({"x"}, {"x^2"}),
  };
}

}  // namespace

TEST_CASE("Jacobi-Taylor matrix shape") {
  auto r = ring_q({"x", "y", "z"}, {"z^2 - x*y"});
  auto j = jacobi_taylor(r, 2);
  CHECK(j.rows.size() == 10);
  CHECK(j.columns.size() == 4);
  auto j3 = extend_jacobi_taylor(r, j);
  CHECK(j3.rows.size() == 20);
  CHECK(j3.columns.size() == 10);
  for (std::size_t row = 0; row < j.rows.size(); ++row)
    for (std::size_t col = 0; col < j.columns.size(); ++col) CHECK(j3.entry(row, col, r) == j.entry(row, col, r));
}

TEST_CASE("free ranks of known rings") {
  CHECK(free_ranks(ring_q({"x", "y"}, {}), 3) == std::vector<std::size_t>{1, 3, 6, 10});
  CHECK(free_ranks(quadric(3), 4) == std::vector<std::size_t>{1, 1, 4, 4, 9});
  CHECK(free_ranks(ring_p(2, {"x", "y", "z"}, {"x^2 + y^3 + z^3"}, {3, 2, 2}), 3) ==
        std::vector<std::size_t>{1, 2, 4, 7});
  CHECK(free_ranks(ring_q({"x", "y", "z"}, {"x^3 + y^3 + z^3"}), 3) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("explicit order-two operator on z^2 - xy") {
  auto r = ring_q({"x", "y", "z"}, {"z^2 - x*y"});
  auto op = make_operator(r, 2,
                          {{Monomial{1, 0, 0}, r.one()},
                           {Monomial{2, 0, 0}, r.parse("4*x")},
                           {Monomial{1, 0, 1}, r.parse("2*z")},
                           {Monomial{0, 0, 2}, r.parse("y")}});
  CHECK(op.to_string(r) == "(0, 1, 0, 0, 4*x, 0, 2*z, 0, 0, y)");
  CHECK(in_kernel(op, r));
  CHECK(is_unitary(op, r));
  CHECK(apply_operator(op, r.parse("x"), r) == r.one());
  CHECK_FALSE(diff_power_membership(r.parse("x"), 3, r).member);
}

TEST_CASE("every generated operator satisfies the kernel equations") {
  for (const auto& r : graded_fixtures())
    for (unsigned n = 0; n <= 2; ++n)
      for (const auto& op : operators_of_order(r, n)) CHECK(in_kernel(op, r));
}

TEST_CASE("free rank agrees with the module-generator oracle") {
  for (const auto& r : graded_fixtures())
    for (unsigned n = 0; n <= 2; ++n) CHECK(free_rank(r, n).free_rank == free_rank_oracle(r, n));
}

TEST_CASE("free rank equals the colength of the differential power") {
  for (const auto& r : graded_fixtures()) {
    for (unsigned n = 1; n <= 3; ++n) {
      Ideal la = diff_power_of_maximal(r, n);
      Ideal colon = diff_power_ideal(maximal_ideal(r), n, r);
      CHECK(la == colon);
      CHECK(quotient_length(la) == free_rank(r, n - 1).free_rank);
    }
  }
}

TEST_CASE("containment chains") {
  for (const auto& r : graded_fixtures()) {
    Ideal prev = Ideal::unit(r.field(), r.nvars());
    for (unsigned n = 1; n <= 4; ++n) {
      Ideal p = diff_power_of_maximal(r, n);
      CHECK(p.contains(maximal_power(r, n)));
      CHECK(prev.contains(p));
      prev = p;
    }
  }
}

TEST_CASE("membership agrees with the operator oracle") {
  std::mt19937 rng(5);
  auto r = ring_q({"x", "y", "z"}, {"z^2 - x*y"});
  for (int trial = 0; trial < 12; ++trial) {
    Polynomial h = random_polynomial(r, rng, 3, 3);
    for (unsigned n = 1; n <= 3; ++n) {
      bool oracle = membership_oracle(h, n, r);
      CHECK(diff_power_membership(h, n, r).member == oracle);
      CHECK(diff_power_of_maximal(r, n).contains(h) == oracle);
    }
  }
}

TEST_CASE("certificates of non-membership are operators of smaller order") {
  auto r = quadric(3);
  auto res = diff_power_membership(r.parse("x1"), 3, r);
  REQUIRE_FALSE(res.member);
  REQUIRE(res.certificate);
  CHECK(res.certificate->order < 3);
  CHECK(in_kernel(*res.certificate, r));
  CHECK_FALSE(apply_operator(*res.certificate, r.parse("x1"), r).constant_term().is_zero());
}

TEST_CASE("smoothness dichotomy for the second differential power") {
  auto plane = ring_q({"x", "y"}, {});
  CHECK(diff_power_of_maximal(plane, 2) == maximal_power(plane, 2));
  for (const auto& r : {quadric(3), ring_q({"x", "y", "z"}, {"x^3 + y^3 + z^3"}),
                        ring_q({"x", "y", "z"}, {"x^2 - y^2*z"}, {3, 2, 2})})
    CHECK_FALSE(diff_power_of_maximal(r, 2) == maximal_power(r, 2));
}

TEST_CASE("differential powers of other ideals by the colon formula") {
  auto r = ring_q({"x", "y"}, {});
  Ideal j = ideal_of(r, {"x"});
  CHECK(diff_power_ideal(j, 3, r) == ideal_of(r, {"x^3"}));
  auto a1 = ring_q({"x", "y", "z"}, {"z^2 - x*y"});
  Ideal p = ideal_of(a1, {"x", "z"});
  Ideal p2 = diff_power_ideal(p, 2, a1);
  CHECK(p2.contains(ideal_of(a1, {"x"})));
  CHECK_FALSE(p2.contains(a1.parse("z")));
}

TEST_CASE("differential core and D-simplicity") {
  auto cubic = ring_q({"x", "y", "z"}, {"x^3 + y^3 + z^3"});
  auto core = diff_core_truncated(maximal_ideal(cubic), 3, cubic);
  CHECK(core.core == maximal_ideal(cubic));
  CHECK(core.last_two_equal);
  CHECK_FALSE(d_simplicity_witness(cubic.parse("x"), 3, cubic));

  auto a1 = ring_q({"x", "y", "z"}, {"z^2 - x*y"});
  auto w = d_simplicity_witness(a1.parse("x"), 3, a1);
  REQUIRE(w);
  CHECK(in_kernel(w->op, a1));
  CHECK_FALSE(w->image.constant_term().is_zero());
  CHECK_THROWS_AS(d_simplicity_witness(a1.parse("z^2 - x*y"), 2, a1), DomainError);
}

TEST_CASE("graded degree bound") {
  auto b = graded_degree_bound(quadric(3), 5);
  CHECK(b.alpha == mpq_class(1, 2));
  CHECK(b.bound == mpq_class(1, 2));
  auto plane = graded_degree_bound(ring_q({"x", "y"}, {}), 3);
  CHECK(plane.bound == 1);
}

TEST_CASE("non-graded rings are rejected") {
  auto r = ring_q({"x", "y"}, {"x^2 - y^3"});
  CHECK_THROWS_AS(signature_sequence(r, 1), DomainError);
  CHECK_THROWS_AS(diff_power_of_maximal(r, 2), DomainError);
}
