#include <doctest.h>

#include <numeric>

#include "diffsig/field.hpp"
#include "diffsig/formulas.hpp"
#include "diffsig/toric.hpp"

using namespace diffsig;

namespace {

mpz_class gcd_of(const IntVector& v) {
  mpz_class g = 0;
  for (long x : v) g = gcd(g, mpz_class(x));
  return g;
}

long eval(const IntVector& l, const IntVector& v) {
  return std::inner_product(l.begin(), l.end(), v.begin(), 0L);
}

std::vector<RationalCone> fixtures() {
  return {veronese_cone(2),
          veronese_cone(5),
          cone_facets({{1, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}}),
          segre_cone(2, 2),
          segre_cone(2, 3),
          segre_cone(3, 3),
          cone_facets({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
          cone_facets({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})};
}

}  // namespace

TEST_CASE("facet enumeration") {
  auto v = cone_facets({{1, 0}, {1, 2}});
  CHECK(v.facets == std::vector<IntVector>{{0, 1}, {2, -1}});
  auto c = cone_facets({{1, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  CHECK(c.facets == std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, -1, 1}, {1, 1, -1}});
  auto o = cone_facets({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(o.facets == std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("facet forms are primitive and nonnegative on rays") {
  for (const auto& cone : fixtures()) {
    for (const auto& l : cone.facets) {
      CHECK(gcd_of(l) == 1);
      for (const auto& r : cone.rays) CHECK(eval(l, r) >= 0);
    }
  }
}

TEST_CASE("cones from facet forms") {
  auto c = cone_from_facets({{0, 1}, {3, -1}});
  CHECK(c.rays == std::vector<IntVector>{{1, 0}, {1, 3}});
  CHECK(diff_signature_polytope(c) == mpq_class(1, 3));
  CHECK(load_cone_json(R"({"facets": [[0, 1], [3, -1]]})").rays == c.rays);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_AS(cone_facets({{1, 0}, {-1, 0}}), DomainError);
  CHECK_THROWS_AS(cone_facets({{1, 0}, {0, 0}}), DomainError);
  CHECK_THROWS_AS(cone_facets({}), DomainError);
  CHECK_THROWS_AS(cone_from_facets({{1, 0}}), DomainError);
  CHECK_THROWS_AS(load_cone_json("{}"), DomainError);
  CHECK_THROWS_AS(load_cone_json(R"({"rays": [[1, 0.5]]})"), DomainError);
}

TEST_CASE("lower-dimensional cones use their own lattice") {
  auto c = cone_facets({{1, 1, 0}, {1, 0, 1}});
  CHECK(c.dimension == 2);
  CHECK(c.span_basis.size() == 2);
  CHECK(diff_signature_polytope(c) == 1);
  auto v = cone_facets({{1, 0, 0}, {1, 2, 0}});
  CHECK(diff_signature_polytope(v) == mpq_class(1, 2));
}

TEST_CASE("differential signature of toric examples") {
  for (unsigned d = 2; d <= 5; ++d) CHECK(diff_signature_polytope(veronese_cone(d)) == mpq_class(1, d));
  CHECK(diff_signature_polytope(cone_facets({{1, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}})) == mpq_class(1, 6));
  for (long m = 2; m <= 4; ++m)
    for (long n = 2; n <= 4; ++n)
      CHECK(diff_signature_polytope(segre_cone(m, n)) == closed_form_signature({FormulaKind::Segre, {m, n}}));
}

TEST_CASE("triangulation independence") {
  for (const auto& cone : fixtures()) {
    mpq_class v0 = diff_signature_polytope(cone, 0);
    mpq_class f0 = f_signature_cone(cone, 0);
    for (unsigned seed : {1u, 2u, 7u, 1234u}) {
      CHECK(diff_signature_polytope(cone, seed) == v0);
      CHECK(f_signature_cone(cone, seed) == f0);
    }
  }
}

TEST_CASE("redundant rays do not change the value") {
  auto base = cone_facets({{1, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  auto extra = cone_facets({{1, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {2, 1, 1}, {3, 1, 2}});
  CHECK(extra.rays == base.rays);
  CHECK(diff_signature_polytope(extra) == diff_signature_polytope(base));
}

TEST_CASE("simplicial cones: both signatures are the inverse lattice index") {
  for (const auto& rays : std::vector<std::vector<IntVector>>{
           {{1, 0}, {1, 4}}, {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, {{1, 0, 0}, {0, 1, 0}, {1, 2, 3}}, {{2, -1}, {-1, 2}}}) {
    auto cone = cone_facets(rays);
    REQUIRE(cone.rays.size() == cone.dimension);
    // Rays scaled to |l| = 1.
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : cone.rays) {
      long s = 0;
      for (const auto& l : cone.facets) s += eval(l, r);
      std::vector<mpq_class> row;
      for (long x : r) row.emplace_back(x, s);
      m.push_back(row);
    }
    mpq_class det = 1;
    for (std::size_t c = 0; c < m.size(); ++c) {
      std::size_t p = c;
      while (sgn(m[p][c]) == 0) ++p;
      if (p != c) std::swap(m[p], m[c]), det = -det;
      det *= m[c][c];
      for (std::size_t i = c + 1; i < m.size(); ++i) {
        mpq_class f = m[i][c] / m[c][c];
        for (std::size_t j = c; j < m.size(); ++j) m[i][j] -= f * m[c][j];
      }
    }
    CHECK(diff_signature_polytope(cone) == abs(det));
    CHECK(f_signature_cone(cone) == abs(det));
  }
}

TEST_CASE("F-signature of K[N^r ∩ L]") {
  CHECK(f_signature_polytope({3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == 1);
  CHECK(f_signature_polytope({2, {{1, 1}}}) == 1);
  CHECK(f_signature_polytope({2, {{2, 2}}}) == 1);
  CHECK(f_signature_polytope(segre_subspace(2, 2)) == mpq_class(2, 3));
  CHECK(f_signature_polytope(segre_subspace(2, 2)) == f_signature_cone(segre_cone(2, 2)));
  CHECK(f_signature_polytope(segre_subspace(2, 3)) == f_signature_cone(segre_cone(2, 3)));
  CHECK_THROWS_AS(f_signature_polytope({2, {{1, -1}}}), DomainError);
  CHECK_THROWS_AS(segre_subspace(1, 3), DomainError);
}

TEST_CASE("lattice normalization does not depend on the basis") {
  // {x1 + x4 = x2 + x3} spanned two ways.
  LinearSubspaceSemigroup a{4, {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}};
  LinearSubspaceSemigroup b{4, {{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}};
  CHECK(f_signature_polytope(a) == f_signature_polytope(b));
  CHECK(f_signature_polytope(a) == mpq_class(2, 3));
}

TEST_CASE("lattice counts converge to the volume") {
  for (const auto& l : {segre_subspace(2, 2), LinearSubspaceSemigroup{3, {{1, 1, 0}, {0, 1, 1}}},
                        LinearSubspaceSemigroup{2, {{1, 2}}}}) {
    mpq_class v = f_signature_polytope(l);
    mpq_class prev_gap = -1;
    for (long n : {6L, 12L, 24L}) {
      mpq_class gap = abs(lattice_count_ratio(l, n) - v);
      if (prev_gap >= 0) CHECK(gap <= prev_gap);
      CHECK(gap * n <= 4 * l.ambient);
      prev_gap = gap;
    }
  }
}

TEST_CASE("polytope volumes") {
  CHECK(polytope_volume({2, {{0, 0}, {mpq_class(1, 2), 0}, {mpq_class(1, 3), mpq_class(1, 3)}}}) == mpq_class(1, 12));
  CHECK(polytope_volume({3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}}) == 1);
  for (std::size_t d = 1; d <= 5; ++d) {
    std::vector<RatVector> v(1, RatVector(d));
    for (std::size_t i = 0; i < d; ++i) {
      RatVector e(d);
      e[i] = 1;
      v.push_back(e);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), d);
    CHECK(polytope_volume({d, v}) == mpq_class(1, fact));
  }
  // Interior points are ignored; the segment from 0 to (2, 2) has lattice length 2.
  CHECK(polytope_volume({2, {{0, 0}, {1, 0}, {0, 1}, {mpq_class(1, 4), mpq_class(1, 4)}}}) == mpq_class(1, 2));
  CHECK(polytope_volume({1, {{0, 0}, {2, 2}}}) == 2);
  CHECK(polytope_volume({0, {{1, 1}}}) == 1);
}

TEST_CASE("integer kernels and saturation") {
  auto k = integer_kernel({{1, 1, -1, -1}}, 4);
  CHECK(k.size() == 3);
  for (const auto& v : k) CHECK(eval({1, 1, -1, -1}, v) == 0);
  CHECK(saturate({{2, 2}}, 2) == std::vector<IntVector>{{1, 1}});
  CHECK(saturate({{1, 0}, {0, 2}}, 2).size() == 2);
}
