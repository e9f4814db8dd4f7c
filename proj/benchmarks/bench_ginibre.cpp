#include <benchmark/benchmark.h>

#include "gintail/abm_lab.hpp"
#include "gintail/ginibre_lab.hpp"

static void BM_GinibreDense(benchmark::State& state) {
  gintail::GinibreConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.count = 4;
  cfg.seed = 1;
  cfg.workers = 1;
  cfg.method = gintail::GinibreMethod::dense_schur;
  for (auto _ : state) benchmark::DoNotOptimize(gintail::sample_ginibre(cfg).size());
}
BENCHMARK(BM_GinibreDense)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_GinibreHessenberg(benchmark::State& state) {
  gintail::GinibreConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.count = 4;
  cfg.seed = 1;
  cfg.workers = 1;
  cfg.method = gintail::GinibreMethod::hessenberg_direct;
  for (auto _ : state) benchmark::DoNotOptimize(gintail::sample_ginibre(cfg).size());
}
BENCHMARK(BM_GinibreHessenberg)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_AbmReplica(benchmark::State& state) {
  gintail::AbmConfig cfg;
  cfg.left_extent = 16.0;
  cfg.init_spacing = 0.04;
  cfg.dt = 4e-4;
  cfg.t_final = 1.0;
  cfg.seed = 3;
  std::uint64_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(gintail::simulate_abm_replica(cfg, i++).n_survivors);
}
BENCHMARK(BM_AbmReplica)->Unit(benchmark::kMillisecond);
