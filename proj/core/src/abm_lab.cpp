#include "gintail/abm_lab.hpp"

#include <algorithm>
#include <cmath>

#include "gintail/errors.hpp"
#include "gintail/mc.hpp"
#include "gintail/rng.hpp"

namespace gintail {

std::vector<std::string> abm_config_warnings(const AbmConfig& config) {
  std::vector<std::string> w;
  const double diffusive = std::sqrt(config.t_final);
  if (!(config.init_spacing < 0.2 * diffusive))
    w.push_back("init_spacing is not small against sqrt(t_final); entrance-law bias likely");
  if (!(config.left_extent > 8.0 * diffusive))
    w.push_back("left_extent is not large against sqrt(t_final); boundary effects likely");
  if (!(std::sqrt(config.dt) < config.init_spacing))
    w.push_back("sqrt(dt) exceeds init_spacing; early-time crossings will be under-resolved");
  return w;
}

AbmResult simulate_abm_replica(const AbmConfig& config, std::uint64_t replica_index) {
  if (!(config.left_extent > 0.0 && config.init_spacing > 0.0))
    throw ValidationError("simulate_abm: extent and spacing must be positive");
  if (!(config.dt > 0.0 && config.t_final > 0.0))
    throw ValidationError("simulate_abm: dt and t_final must be positive");

  CounterRng rng(config.seed, replica_index);
  const auto n_init =
      static_cast<std::uint64_t>(std::llround(config.left_extent / config.init_spacing));
  std::vector<double> pos(n_init);
  // Lattice on [-left_extent, 0], cell-centered.
  for (std::uint64_t i = 0; i < n_init; ++i)
    pos[i] = -config.left_extent + (static_cast<double>(i) + 0.5) * config.init_spacing;

  const auto n_steps =
      static_cast<std::uint64_t>(std::llround(config.t_final / config.dt));
  const double step_sigma = std::sqrt(config.dt);

  AbmResult r;
  std::vector<double> survivors;
  for (std::uint64_t s = 0; s < n_steps && !pos.empty(); ++s) {
    for (double& x : pos) x += step_sigma * rng.next_gaussian();
    // Annihilate order inversions (path crossings) pairwise, left to right,
    // sweeping until the remainder is strictly increasing.
    bool changed = true;
    while (changed) {
      changed = false;
      survivors.clear();
      std::size_t i = 0;
      while (i < pos.size()) {
        if (i + 1 < pos.size() && pos[i] > pos[i + 1]) {
          ++r.annihilations;
          i += 2;
          changed = true;
        } else {
          survivors.push_back(pos[i]);
          ++i;
        }
      }
      pos.swap(survivors);
    }
  }
  r.n_survivors = pos.size();
  if (pos.empty()) {
    r.empty = true;
  } else {
    r.rightmost_rescaled = pos.back() / std::sqrt(4.0 * config.t_final);
  }
  return r;
}

std::vector<AbmResult> simulate_abm(const AbmConfig& config) {
  if (config.replicas == 0) throw ValidationError("simulate_abm: replicas must be positive");
  return run_blocks<AbmResult>(config.replicas, config.workers, [&](std::uint64_t b) {
    return simulate_abm_replica(config, b);
  });
}

std::vector<double> rightmost_values(const std::vector<AbmResult>& results,
                                     std::uint64_t* empties) {
  std::vector<double> out;
  std::uint64_t none = 0;
  for (const auto& r : results) {
    if (r.empty)
      ++none;
    else
      out.push_back(r.rightmost_rescaled);
  }
  if (empties) *empties = none;
  return out;
}

TailCurve rescaled_tail(const std::vector<AbmResult>& results,
                        std::span<const double> L_grid, std::uint64_t min_count) {
  std::uint64_t none = 0;
  const std::vector<double> values = rightmost_values(results, &none);
  return tail_curve(values, L_grid, results.size(), none, min_count);
}

}  // namespace gintail
