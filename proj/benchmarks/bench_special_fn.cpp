#include <benchmark/benchmark.h>

#include "gintail/special_fn.hpp"

static void BM_OmegaRaw(benchmark::State& state) {
  const double t = state.range(0) / 100.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(gintail::omega_direct(t, {1e-14, 100000}).value);
}
BENCHMARK(BM_OmegaRaw)->Arg(25)->Arg(100)->Arg(1000);

static void BM_OmegaModular(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gintail::omega(0.05, {1e-14, 100000}).value);
}
BENCHMARK(BM_OmegaModular);

static void BM_Zeta32(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gintail::zeta_three_halves({1e-12, 100000}).value);
}
BENCHMARK(BM_Zeta32);

static void BM_EulerMascheroniTheta(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(gintail::euler_mascheroni_theta({1e-10, 200000}).value);
}
BENCHMARK(BM_EulerMascheroniTheta);
