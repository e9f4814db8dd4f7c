#include <benchmark/benchmark.h>

#include "gintail/constants.hpp"

static void BM_InnerSum(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gintail::inner_sum(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_InnerSum)->Arg(1000)->Arg(10000)->Arg(100000)->Complexity();

static void BM_SeriesTermsPairing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gintail::series_terms(state.range(0)));
}
BENCHMARK(BM_SeriesTermsPairing)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

static void BM_SeriesTermsFft(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gintail::series_terms(state.range(0)));
}
BENCHMARK(BM_SeriesTermsFft)->Arg(100000)->Arg(400000)->Unit(benchmark::kMillisecond);

static void BM_CEdgeTailCorrected(benchmark::State& state) {
  const auto terms = gintail::series_terms(100000);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gintail::c_edge(std::span<const double>(terms), gintail::TailMode::tail_corrected).value);
}
BENCHMARK(BM_CEdgeTailCorrected);
