#include <benchmark/benchmark.h>

#include "gintail/walk_lab.hpp"

static void BM_TransferStep(benchmark::State& state) {
  gintail::TransferParams params;
  params.cells_per_L = state.range(0);
  gintail::TransferOperator op(10.0, params);
  gintail::GridDensity d = op.initial();
  for (auto _ : state) {
    op.step(d);
    benchmark::DoNotOptimize(d.mass.data());
  }
}
BENCHMARK(BM_TransferStep)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_ExitProbabilityMc(benchmark::State& state) {
  gintail::WalkConfig cfg;
  cfg.batch = 10000;
  cfg.seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(gintail::exit_probability_mc(cfg, 5.0).probability.mean);
}
BENCHMARK(BM_ExitProbabilityMc)->Unit(benchmark::kMillisecond);

static void BM_BridgeRangeCapped(benchmark::State& state) {
  gintail::WalkConfig cfg;
  cfg.batch = 5000;
  cfg.seed = 2;
  const std::int64_t n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        gintail::bridge_expectation(n, gintail::BridgeFunctional::range_capped, 1.0, cfg).mean);
}
BENCHMARK(BM_BridgeRangeCapped)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
