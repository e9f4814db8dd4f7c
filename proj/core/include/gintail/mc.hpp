#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "gintail/rng.hpp"

namespace gintail {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(n)
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Running (sum, sum of squares, count) accumulator. Partials from different
// blocks are merged in block-index order so the final numbers do not depend
// on how blocks were assigned to threads.
struct McAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  void merge(const McAccumulator& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    n += o.n;
  }
  McEstimate finalize(std::uint64_t seed, double scale = 1.0) const;
};

inline unsigned resolve_worker_count(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// Runs fn(block_index) for block_index in [0, n_blocks) on a small thread
// pool and returns the results ordered by block index. The block is the unit
// of reproducibility: its content must not depend on which thread ran it.
template <typename Partial, typename BlockFn>
std::vector<Partial> run_blocks(std::uint64_t n_blocks, unsigned workers, BlockFn fn) {
  std::vector<Partial> out(n_blocks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      out[b] = fn(b);
    }
  };
  const unsigned nw = resolve_worker_count(workers);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nw && i < n_blocks; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

inline constexpr std::uint64_t kMcBlockSize = 8192;

// Mean of per-sample values produced by fn(sample_index, rng), with one
// counter-based RNG stream per sample. Bitwise identical for any worker
// count. `scale` multiplies the estimate (used to fold in exact densities).
template <typename SampleFn>
McEstimate mc_mean(std::uint64_t n_samples, std::uint64_t seed, unsigned workers,
                   SampleFn fn, double scale = 1.0) {
  const std::uint64_t n_blocks = (n_samples + kMcBlockSize - 1) / kMcBlockSize;
  auto partials = run_blocks<McAccumulator>(n_blocks, workers, [&](std::uint64_t b) {
    McAccumulator acc;
    const std::uint64_t lo = b * kMcBlockSize;
    const std::uint64_t hi = std::min(n_samples, lo + kMcBlockSize);
    for (std::uint64_t i = lo; i < hi; ++i) {
      CounterRng rng(seed, i);
      acc.add(fn(i, rng));
    }
    return acc;
  });
  McAccumulator total;
  for (const auto& p : partials) total.merge(p);
  return total.finalize(seed, scale);
}

}  // namespace gintail
