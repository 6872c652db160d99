#include <benchmark/benchmark.h>

#include "fdo/potential.hpp"
#include "fdo/spectral.hpp"

static void BM_Assemble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fdo::Grid grid = fdo::build_grid(40.0, n);
  const fdo::PotentialSpec square(2.0, 0.0);
  for (auto _ : state) {
    auto op = fdo::assemble(grid, square);
    benchmark::DoNotOptimize(op.data().data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Assemble)->RangeMultiplier(2)->Range(128, 1024)->Complexity();

static void BM_Eigenvalues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = fdo::assemble(fdo::build_grid(40.0, n), fdo::PotentialSpec(2.0, 0.0));
  for (auto _ : state) {
    auto ev = fdo::symmetric_eigenvalues(op.data(), n);
    benchmark::DoNotOptimize(ev.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_CountBelow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto op = fdo::assemble(fdo::build_grid(30.0, n), fdo::PotentialSpec(1.0, 0.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fdo::count_below(op, 20.0));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CountBelow)->RangeMultiplier(2)->Range(64, 512)->Complexity();

BENCHMARK_MAIN();
