#include <benchmark/benchmark.h>

#include "hodge/certificates.hpp"
#include "hodge/dumbbell.hpp"
#include "hodge/family.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/product.hpp"
#include "hodge/spectral.hpp"

namespace {

using namespace hodge;

void BM_IntegerRank(benchmark::State& state) {
  const auto k = fixtures::simplex_skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(integer_rank(k.complex.coboundary(1)));
}
BENCHMARK(BM_IntegerRank)->Arg(8)->Arg(12)->Arg(16);

void BM_CoexactSpectrumDumbbell(benchmark::State& state) {
  const auto g = dumbbell(3, 1, 1e-2);
  for (auto _ : state) benchmark::DoNotOptimize(coexact_spectrum(g.body.complex, g.body.weights, 1, state.range(0)));
}
BENCHMARK(BM_CoexactSpectrumDumbbell)->Arg(0)->Arg(1);

void BM_FamilyEvaluation(benchmark::State& state) {
  const GluedFamily fam(scaled_octahedron(3, 1, 40.0), FamilyConfig{});
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fam.evaluate({1.05, theta}));
    theta += 0.01;
  }
}
BENCHMARK(BM_FamilyEvaluation)->Unit(benchmark::kMillisecond);

void BM_FindDegeneracySynthetic(benchmark::State& state) {
  const FamilyEvaluator f = [](const ParamPoint& a) {
    return FamilySample{QuadraticForm2::from_coordinates(a.lambda2 - 0.3, a.theta - 1.1, 2.0), Eigen::VectorXd()};
  };
  const DomainRect d{0.0, 1.0, 0.0, 3.14159};
  for (auto _ : state) benchmark::DoNotOptimize(find_degeneracy(f, d));
}
BENCHMARK(BM_FindDegeneracySynthetic)->Unit(benchmark::kMillisecond);

void BM_ProductSpectrum(benchmark::State& state) {
  for (auto _ : state) {
    auto [prod, report] = high_multiplicity_example(1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report.multiplicity);
  }
}
BENCHMARK(BM_ProductSpectrum)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
