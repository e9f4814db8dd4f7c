#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gintail/stats.hpp"

namespace gintail {

struct AbmConfig {
  double left_extent = 16.0;   // initial particles fill [-left_extent, 0]
  double init_spacing = 0.04;  // lattice spacing delta
  double dt = 4e-4;
  double t_final = 1.0;
  std::uint64_t replicas = 2000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct AbmResult {
  double rightmost_rescaled = std::numeric_limits<double>::quiet_NaN();  // X_max / sqrt(4 t)
  std::uint64_t n_survivors = 0;
  std::uint64_t annihilations = 0;
  bool empty = false;  // all particles annihilated (counted, not an error)
};

// Entrance-law and boundary guards. Violations are reported as warnings, not
// errors: the refinement studies need to cross them on purpose.
std::vector<std::string> abm_config_warnings(const AbmConfig& config);

// Euler evolution with N(0, dt) displacements; after each step neighbours
// whose order inverted are annihilated pairwise left-to-right, repeating the
// sweep until the survivors are strictly ordered.
AbmResult simulate_abm_replica(const AbmConfig& config, std::uint64_t replica_index);

std::vector<AbmResult> simulate_abm(const AbmConfig& config);

std::vector<double> rightmost_values(const std::vector<AbmResult>& results,
                                     std::uint64_t* empties = nullptr);

TailCurve rescaled_tail(const std::vector<AbmResult>& results,
                        std::span<const double> L_grid, std::uint64_t min_count = 25);

}  // namespace gintail
