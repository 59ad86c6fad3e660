#include <benchmark/benchmark.h>

#include "phylodist/phylodist.hpp"

namespace {

using phylodist::BigRatio;

void BM_TreeCount(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::tree_count(n));
  }
}
BENCHMARK(BM_TreeCount)->RangeMultiplier(10)->Range(100, 100000);

void BM_Distribution(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::distribution(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Distribution)->RangeMultiplier(2)->Range(50, 400)->Complexity();

void BM_CumulativeClosed(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::cumulative_fraction(n, n / 2));
  }
}
BENCHMARK(BM_CumulativeClosed)->RangeMultiplier(2)->Range(50, 400);

void BM_CumulativeDirect(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::cumulative_fraction_direct(n, n / 2));
  }
}
BENCHMARK(BM_CumulativeDirect)->RangeMultiplier(2)->Range(50, 400);

void BM_MedianExact(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const BigRatio half(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::detail::percentile_exact(n, half));
  }
}
BENCHMARK(BM_MedianExact)->RangeMultiplier(2)->Range(64, 512);

void BM_MedianLogspace(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const BigRatio half(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::detail::percentile_logspace(n, half));
  }
}
BENCHMARK(BM_MedianLogspace)->RangeMultiplier(10)->Range(1000, 10000000);

void BM_SeriesCount(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::c_via_series(n, n / 2));
  }
}
BENCHMARK(BM_SeriesCount)->RangeMultiplier(2)->Range(16, 128);

void BM_TelescopedDirect(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::s_k_direct(n, n - 2));
  }
}
BENCHMARK(BM_TelescopedDirect)->RangeMultiplier(2)->Range(50, 400);

void BM_Enumerate(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    std::uint64_t trees = 0;
    phylodist::enumerate(n, [&](const phylodist::PhyloTree&) { ++trees; });
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(6, 8);

void BM_EmpiricalDistributionParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::empirical_distribution(9, 10, threads));
  }
}
BENCHMARK(BM_EmpiricalDistributionParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_SampleUniform(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phylodist::sample_uniform(n, seed++));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SampleUniform)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
    return 1;
  }
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
