#include <benchmark/benchmark.h>

#include "fdo/phasespace.hpp"
#include "fdo/potential.hpp"

static void BM_QuadrantPower(benchmark::State& state) {
  const fdo::PotentialSpec spec(2.0, 0.0);
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fdo::quadrant_integral(fdo::PhaseSpaceQuery(lambda, 1.0, spec)));
  }
}
BENCHMARK(BM_QuadrantPower)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_QuadrantMixed(benchmark::State& state) {
  const fdo::PotentialSpec spec(1.0, 1.0);
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fdo::quadrant_integral(fdo::PhaseSpaceQuery(lambda, 1.0, spec)));
  }
}
BENCHMARK(BM_QuadrantMixed)->Arg(100)->Arg(1000);

static void BM_HeatSmooth(benchmark::State& state) {
  const fdo::PotentialSpec spec(2.0, 0.0);
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdo::heat_smooth(spec, a, 1.5));
  }
}
BENCHMARK(BM_HeatSmooth)->Arg(1)->Arg(100);

static void BM_CoshIntegral(benchmark::State& state) {
  const fdo::PotentialSpec spec(0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fdo::cosh_integral(fdo::PhaseSpaceQuery(1000.0, 1.0, spec)));
  }
}
BENCHMARK(BM_CoshIntegral);
