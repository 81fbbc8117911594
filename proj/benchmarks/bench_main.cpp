#include <benchmark/benchmark.h>

#include "diffsig/groebner.hpp"
#include "diffsig/principal_parts.hpp"
#include "diffsig/toric.hpp"

using namespace diffsig;

namespace {

RingPresentation quadric_ring() {
  return RingPresentation::from_strings(Field::rationals(), {"x", "y", "z"}, {"x^2 + y^2 + z^2"}, {});
}

void BM_GroebnerCyclic3(benchmark::State& state) {
  auto r = RingPresentation::from_strings(Field::rationals(), {"x", "y", "z"}, {}, {});
  std::vector<Polynomial> gens = {r.parse("x + y + z"), r.parse("x*y + y*z + z*x"), r.parse("x*y*z - 1")};
  for (auto _ : state) benchmark::DoNotOptimize(Ideal(r.field(), 3, gens).basis().size());
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_GroebnerModP(benchmark::State& state) {
  auto r = RingPresentation::from_strings(Field::prime(32003), {"x", "y", "z"}, {}, {});
  std::vector<Polynomial> gens = {r.parse("x^3 - y*z^2 + 1"), r.parse("y^3 - x^2*z"), r.parse("z^3 - x*y + 2")};
  for (auto _ : state) benchmark::DoNotOptimize(Ideal(r.field(), 3, gens).basis().size());
}
BENCHMARK(BM_GroebnerModP);

void BM_SignatureSequence(benchmark::State& state) {
  auto r = quadric_ring();
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signature_sequence(r, order).entries.size());
}
BENCHMARK(BM_SignatureSequence)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ColonFormula(benchmark::State& state) {
  auto r = quadric_ring();
  Ideal m = maximal_ideal(r);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diff_power_ideal(m, n, r).basis().size());
}
BENCHMARK(BM_ColonFormula)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ToricSegre(benchmark::State& state) {
  auto cone = segre_cone(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(diff_signature_polytope(cone));
}
BENCHMARK(BM_ToricSegre)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_FSignatureSegre(benchmark::State& state) {
  auto l = segre_subspace(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f_signature_polytope(l));
}
BENCHMARK(BM_FSignatureSegre)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
