#include <algorithm>
#include <atomic>
#include <cmath>

#include "gintail/errors.hpp"
#include "gintail/walk_lab.hpp"

namespace gintail {

namespace {

// Re-runs the walk for sample `index` from scratch up to `horizon` steps.
// Because the increment stream is a pure function of (seed, index), replaying
// with a longer horizon extends the same path, which is what makes the
// geometric horizon growth reproducible across worker counts.
StopRecord run_walk(const WalkConfig& cfg, double L, std::uint64_t index,
                    std::uint64_t horizon) {
  CounterRng rng(cfg.seed, index);
  const double sigma = std::sqrt(cfg.increment_variance);
  StopRecord rec;
  double pos = 0.0;
  double odd_max = -1e308;
  double even_min = 0.0;  // time 0 included
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    pos += sigma * rng.next_gaussian();
    if (k & 1) {
      odd_max = std::max(odd_max, pos);
      if (rec.tau_L == 0 && pos >= L) rec.tau_L = k;
    } else {
      even_min = std::min(even_min, pos);
      if (pos <= 0.0) {
        rec.tau_0 = k;
        rec.odd_max = odd_max;
        rec.even_min = even_min;
        rec.endpoint = pos;
        return rec;
      }
    }
  }
  rec.truncated = true;
  rec.odd_max = odd_max;
  rec.even_min = even_min;
  rec.endpoint = pos;
  return rec;
}

}  // namespace

WalkSampleSummary sample_walks(const WalkConfig& config, double L,
                               std::uint64_t initial_horizon, double truncated_target) {
  if (!(L > 0.0)) throw ValidationError("sample_walks: L must be positive");
  WalkSampleSummary out;
  out.records.resize(config.batch);
  std::vector<std::uint64_t> pending(config.batch);
  for (std::uint64_t i = 0; i < config.batch; ++i) pending[i] = i;

  std::uint64_t horizon = std::min<std::uint64_t>(initial_horizon, config.max_horizon);
  for (;;) {
    const std::uint64_t n_pending = pending.size();
    constexpr std::uint64_t kChunk = 256;
    const std::uint64_t n_blocks = (n_pending + kChunk - 1) / kChunk;
    auto blocks = run_blocks<std::vector<StopRecord>>(
        n_blocks, config.workers, [&](std::uint64_t b) {
          std::vector<StopRecord> recs;
          const std::uint64_t lo = b * kChunk;
          const std::uint64_t hi = std::min(n_pending, lo + kChunk);
          recs.reserve(hi - lo);
          for (std::uint64_t j = lo; j < hi; ++j)
            recs.push_back(run_walk(config, L, pending[j], horizon));
          return recs;
        });
    std::vector<std::uint64_t> still;
    std::uint64_t j = 0;
    for (const auto& blk : blocks) {
      for (const auto& rec : blk) {
        out.records[pending[j]] = rec;
        if (rec.truncated) still.push_back(pending[j]);
        ++j;
      }
    }
    const double frac =
        static_cast<double>(still.size()) / static_cast<double>(config.batch);
    if (still.empty() || frac < truncated_target || horizon >= config.max_horizon) {
      out.truncated_fraction = frac;
      out.final_horizon = horizon;
      return out;
    }
    pending = std::move(still);
    horizon = std::min<std::uint64_t>(horizon * 2, config.max_horizon);
  }
}

ExitEstimate exit_probability_mc(const WalkConfig& config, double L) {
  if (!(L > 0.0)) throw ValidationError("exit_probability_mc: L must be positive");
  const double sigma = std::sqrt(config.increment_variance);
  std::atomic<std::uint64_t> truncated{0};
  // A walk confined to (0, L) per parity dies out exponentially fast, so the
  // hard cap is effectively never hit for sane L; count it anyway.
  McEstimate est = mc_mean(
      config.batch, config.seed, config.workers,
      [&](std::uint64_t, CounterRng& rng) -> double {
        double pos = 0.0;
        for (std::uint64_t k = 1; k <= config.max_horizon; ++k) {
          pos += sigma * rng.next_gaussian();
          if (k & 1) {
            if (pos >= L) return 1.0;
          } else {
            if (pos <= 0.0) return 0.0;
          }
        }
        ++truncated;
        return 0.0;
      });
  return {est, static_cast<double>(truncated) / static_cast<double>(config.batch)};
}

}  // namespace gintail
