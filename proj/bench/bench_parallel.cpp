// Serial reference vs OpenMP kernels: numeric search and the exact suite.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "invcoef/search.hpp"
#include "invcoef/suite.hpp"

using namespace invcoef;

namespace {

const ClassSpec kSpecs[] = {{ClassKind::Starlike, 3, 1}, {ClassKind::Convex, 3, 1}, {ClassKind::Noshiro, 1, 0}};

void BM_SearchSerial(benchmark::State& state) {
  const ClassSpec spec = kSpecs[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_search_serial(spec, 6, SearchGrid{}));
}

void BM_SearchParallel(benchmark::State& state) {
  const ClassSpec spec = kSpecs[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_search(spec, 6, SearchGrid{}));
}

SuiteConfig small_suite(bool parallel) {
  SuiteConfig cfg;
  cfg.class_name = "starlike";
  cfg.N = 12;
  cfg.product_sum_samples = 100;
  cfg.exact_only = true;
  cfg.parallel = parallel;
  return cfg;
}

void BM_SuiteSerial(benchmark::State& state) {
  const SuiteConfig cfg = small_suite(false);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}

void BM_SuiteParallel(benchmark::State& state) {
  const SuiteConfig cfg = small_suite(true);
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
