#include <doctest.h>
#include "support.hpp"

#include "diffsig/frobenius.hpp"

using namespace diffsig;
using namespace diffsig::testing;

TEST_CASE("Frobenius levels") {
  auto l = FrobeniusLevel::make(3, 2);
  CHECK(l.q == 9);
  CHECK_THROWS_AS(FrobeniusLevel::make(4, 1), DomainError);
  CHECK_THROWS_AS(FrobeniusLevel::make(2, 0), DomainError);
}

TEST_CASE("z^2 - xy over F_2") {
  auto r = ring_p(2, {"x", "y", "z"}, {"z^2 - x*y"});
  auto l1 = FrobeniusLevel::make(2, 1);
  Ideal colon = fdiff_power_ideal(maximal_ideal(r), l1, r);
  CHECK(colon == fdiff_power_of_maximal(r, l1));
  CHECK(colon == fedder_hypersurface_oracle(r, l1));
  CHECK(colon == fedder_splitting_ideal(r, l1));
  // z * (z^2 + xy) = z^3 + xyz and xyz is not in m^[2], so z survives.
  CHECK(colon == ideal_of(r, {"x", "y", "z^2"}));
  CHECK(is_f_pure(r));
}

TEST_CASE("sandwich m^[q] in m^{F<q>} in m^<q>") {
  for (const auto& r : {ring_p(2, {"x", "y", "z"}, {"z^2 - x*y"}), ring_p(3, {"x", "y", "z"}, {"z^2 - x*y"}),
                        ring_p(2, {"x", "y", "z"}, {"x^2 + y^3 + z^3"}, {3, 2, 2})}) {
    for (unsigned e = 1; e <= 2; ++e) {
      auto level = FrobeniusLevel::make(r.field().characteristic(), e);
      if (level.q > 4 && r.field().characteristic() == 3) continue;
      Ideal f = fdiff_power_of_maximal(r, level);
      CHECK(f.contains(frobenius_power_of_maximal(r, level.q)));
      CHECK(diff_power_of_maximal(r, static_cast<unsigned>(level.q)).contains(f));
      CHECK_FALSE(f.is_unit());
    }
  }
}

TEST_CASE("Fedder oracle agrees exactly for F-pure hypersurfaces") {
  for (const auto& r : {ring_p(2, {"x", "y", "z"}, {"z^2 - x*y"}), ring_p(3, {"x", "y", "z"}, {"z^2 - x*y"}),
                        ring_p(2, {"x", "y", "z", "w"}, {"x*y - z*w"})}) {
    auto level = FrobeniusLevel::make(r.field().characteristic(), 1);
    REQUIRE(is_f_pure(r));
    CHECK(fdiff_power_of_maximal(r, level) == fedder_hypersurface_oracle(r, level));
  }
}

TEST_CASE("non F-pure rings report a unit splitting ideal") {
  auto r = ring_p(2, {"x", "y", "z"}, {"x^2 + y^3 + z^3"}, {3, 2, 2});
  CHECK_FALSE(is_f_pure(r));
  auto seq = f_signature_sequence(r, 1);
  CHECK(seq.warning);
  CHECK(seq.entries[0].length == 0);
  CHECK(seq.entries[0].fdiff_length > 0);
}

TEST_CASE("F-signature sequences") {
  auto plane = ring_p(3, {"x", "y"}, {});
  auto s = f_signature_sequence(plane, 2);
  CHECK(s.entries[0].length == 9);
  CHECK(s.entries[1].length == 81);
  CHECK(s.entries[1].ratio == 1);
  auto a1 = f_signature_sequence(ring_p(2, {"x", "y", "z"}, {"z^2 - x*y"}), 2);
  for (const auto& e : a1.entries) CHECK(e.ratio == mpq_class(1, 2));
}

TEST_CASE("box budget") {
  auto r = ring_p(2, {"x", "y", "z", "w"}, {"x*y - z*w"});
  FrobeniusOptions tight;
  tight.max_box = 10;
  CHECK_THROWS_AS(fdiff_power_of_maximal(r, FrobeniusLevel::make(2, 1), tight), BudgetExhausted);
}
