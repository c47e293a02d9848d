#include <benchmark/benchmark.h>

#include "toralf/chen_teo.hpp"
#include "toralf/kahler.hpp"
#include "toralf/metric.hpp"
#include "toralf/potential.hpp"
#include "toralf/profile.hpp"
#include "toralf/regularity.hpp"

using namespace toralf;

static void BM_ProfileEval(benchmark::State& state) {
  const Profile p = presets::chen_teo_instanton(0.4);
  double z = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.value(z));
    z += 1e-3;
    if (z > 2.0) z = -2.0;
  }
}
BENCHMARK(BM_ProfileEval);

static void BM_PotentialSample(benchmark::State& state) {
  const Profile p = presets::chen_teo_instanton(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(eval_potential(p, 0.8, 0.2));
}
BENCHMARK(BM_PotentialSample);

static void BM_MetricFields(benchmark::State& state) {
  const Profile p = presets::chen_teo_instanton(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(eval_fields(p, 0.8, 0.2));
}
BENCHMARK(BM_MetricFields);

static void BM_RicciResidual(benchmark::State& state) {
  const Profile p = presets::schwarzschild(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(ricci_residual(p, 1.0, 0.3, 1e-4));
}
BENCHMARK(BM_RicciResidual);

static void BM_MomentPolytope(benchmark::State& state) {
  const Profile p = presets::chen_teo_instanton(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(moment_polytope(p));
}
BENCHMARK(BM_MomentPolytope);

static void BM_SolveRegularity(benchmark::State& state) {
  const ChenTeoParams params = ChenTeoParams::from_ab(0.4, 0.6, 1.0 / 0.6, 1.0 / 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(solve_regularity(params));
}
BENCHMARK(BM_SolveRegularity);

BENCHMARK_MAIN();
