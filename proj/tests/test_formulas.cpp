#include <doctest.h>

#include "diffsig/field.hpp"
#include "diffsig/formulas.hpp"
#include "diffsig/toric.hpp"

using namespace diffsig;

namespace {
mpq_class sig(FormulaKind k, std::vector<long> p) { return closed_form_signature({k, std::move(p)}); }
}  // namespace

TEST_CASE("documented values") {
  CHECK(sig(FormulaKind::Determinantal, {2, 2, 1}) == mpq_class(1, 4));
  CHECK(sig(FormulaKind::Quadric, {2}) == mpq_class(1, 2));
  CHECK(sig(FormulaKind::Quadric, {3}) == mpq_class(1, 4));
  for (long d = 2; d <= 6; ++d) CHECK(sig(FormulaKind::Quadric, {d}) * (1L << (d - 1)) == 1);
  CHECK(sig(FormulaKind::FiniteGroup, {2}) == mpq_class(1, 2));
  CHECK(sig(FormulaKind::Veronese, {7}) == mpq_class(1, 7));
  CHECK(sig(FormulaKind::Grassmannian24, {}) == mpq_class(1, 16));
  CHECK(sig(FormulaKind::Pfaffian, {1, 5}) == mpq_class(5, 128));
}

TEST_CASE("Segre consistency with the determinantal formula") {
  for (long m = 2; m <= 6; ++m)
    for (long n = m; n <= 6; ++n)
      CHECK(sig(FormulaKind::Determinantal, {m, n, 1}) == sig(FormulaKind::Segre, {m, n}));
}

TEST_CASE("coincidences between families") {
  // Rank-one symmetric matrices: the second Veronese of a polynomial ring.
  for (long n = 2; n <= 6; ++n) CHECK(sig(FormulaKind::Symmetric, {1, n}) == mpq_class(1, 2));
  // 2 x 2 rank-one matrices form the quadric in four variables (d = 3).
  CHECK(sig(FormulaKind::Determinantal, {2, 2, 1}) == sig(FormulaKind::Quadric, {3}));
  // Symmetric 2 x 2 rank one: the quadric cone (d = 2).
  CHECK(sig(FormulaKind::Symmetric, {1, 2}) == sig(FormulaKind::Quadric, {2}));
}

TEST_CASE("toric cross-check") {
  for (unsigned d = 1; d <= 6; ++d) CHECK(sig(FormulaKind::Veronese, {long(d)}) == diff_signature_polytope(veronese_cone(d)));
  for (unsigned m = 2; m <= 4; ++m)
    for (unsigned n = 2; n <= 4; ++n)
      CHECK(sig(FormulaKind::Segre, {long(m), long(n)}) == diff_signature_polytope(segre_cone(m, n)));
}

TEST_CASE("values lie in (0, 1]") {
  for (long m = 2; m <= 5; ++m)
    for (long n = m; n <= 6; ++n)
      for (long r = 1; r < m; ++r) {
        mpq_class v = sig(FormulaKind::Determinantal, {m, n, r});
        CHECK(v > 0);
        CHECK(v <= 1);
      }
  for (long k = 1; k <= 3; ++k)
    for (long n = k + 1; n <= 7; ++n) {
      mpq_class v = sig(FormulaKind::Symmetric, {k, n});
      CHECK(v > 0);
      CHECK(v <= 1);
    }
  for (long k = 1; k <= 2; ++k)
    for (long n = 2 * k + 3; n <= 10; ++n) {
      mpq_class v = sig(FormulaKind::Pfaffian, {k, n});
      CHECK(v > 0);
      CHECK(v <= 1);
    }
}

TEST_CASE("validity windows are enforced") {
  CHECK_THROWS_AS(sig(FormulaKind::Pfaffian, {1, 4}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Determinantal, {2, 2, 2}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Determinantal, {3, 2, 1}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Symmetric, {3, 3}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Quadric, {1}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Segre, {1, 4}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Veronese, {0}), DomainError);
  CHECK_THROWS_AS(sig(FormulaKind::Veronese, {2, 3}), DomainError);
  CHECK_THROWS_AS(parse_formula_kind("nonsense"), DomainError);
  CHECK(parse_formula_kind("grassmannian-2-4") == FormulaKind::Grassmannian24);
}
