// Serial vs OpenMP comparison for the two data-parallel kernels: the
// assignment-enumeration sweep and the forcing census.

#include <benchmark/benchmark.h>

#include <random>

#include "origami/forcing.hpp"
#include "origami/sampling.hpp"

namespace {

origami::CreasePattern bench_pattern(int degree) {
  std::mt19937_64 rng(origami::instance_seed(42, degree));
  return origami::random_foldable_pattern(degree, rng);
}

void BM_enumerate_serial(benchmark::State& state) {
  const auto p = bench_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(origami::enumerate_foldable_masks_serial(p));
}

void BM_enumerate_omp(benchmark::State& state) {
  const auto p = bench_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(origami::enumerate_foldable_masks(p));
}

void BM_census_serial(benchmark::State& state) {
  origami::CensusParams params;
  params.degree = static_cast<int>(state.range(0));
  params.samples = 20;
  params.seed = 7;
  for (auto _ : state)
    benchmark::DoNotOptimize(origami::forcing_census_serial(params));
}

void BM_census_omp(benchmark::State& state) {
  origami::CensusParams params;
  params.degree = static_cast<int>(state.range(0));
  params.samples = 20;
  params.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(origami::forcing_census(params));
}

}  // namespace

BENCHMARK(BM_enumerate_serial)->Arg(14)->Arg(16)->Arg(18);
BENCHMARK(BM_enumerate_omp)->Arg(14)->Arg(16)->Arg(18);
BENCHMARK(BM_census_serial)->Arg(6)->Arg(7);
BENCHMARK(BM_census_omp)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
