#include <cmath>
#include <numbers>
#include <vector>

#include "gintail/errors.hpp"
#include "gintail/walk_lab.hpp"

namespace gintail {

namespace {
constexpr double kPi = std::numbers::pi;
}

double trivariate_density(double a, double b, double t, int K) {
  if (!(t > 0.0)) throw ValidationError("trivariate_density: t must be positive");
  if (!(a <= 0.0 && b >= 0.0)) throw ValidationError("trivariate_density: need a <= 0 <= b");
  const double width = b - a;
  if (width == 0.0) return 0.0;
  const double norm = 1.0 / std::sqrt(2.0 * kPi * t);
  if (K < 0) {
    // Both image families decay like exp(-2 k^2 width^2 / t); stop when the
    // next |k| contributes below 1e-18 relative to the free density.
    const double arg = 2.0 * width * width / t;
    K = 1 + static_cast<int>(std::ceil(std::sqrt(42.0 / arg)));
  }
  double sum = 0.0;
  for (int k = -K; k <= K; ++k) {
    const double shift = static_cast<double>(k) * width;
    sum += std::exp(-2.0 * shift * shift / t) - std::exp(-2.0 * (b - shift) * (b - shift) / t);
  }
  return norm * sum;
}

McEstimate trivariate_mc(double a, double b, double t, std::int64_t n_steps,
                         const WalkConfig& config) {
  if (!(t > 0.0)) throw ValidationError("trivariate_mc: t must be positive");
  if (!(a <= 0.0 && b >= 0.0)) throw ValidationError("trivariate_mc: need a <= 0 <= b");
  if (n_steps < 2) throw ValidationError("trivariate_mc: need at least 2 steps");
  const auto m = static_cast<std::uint64_t>(n_steps);
  const double dt = t / static_cast<double>(m);
  const double sigma = std::sqrt(dt);
  const double density = 1.0 / std::sqrt(2.0 * kPi * t);

  thread_local std::vector<double> path;
  auto sample = [&](std::uint64_t, CounterRng& rng) -> double {
    path.resize(m);
    double s = 0.0;
    for (auto& x : path) {
      x = sigma * rng.next_gaussian();
      s += x;
    }
    const double drift = s / static_cast<double>(m);
    // Skeleton of the Brownian bridge; survival weight multiplies the exact
    // conditional no-crossing probabilities of each segment for both walls.
    double weight = 1.0;
    double x0 = 0.0, run = 0.0;
    for (std::uint64_t k = 0; k < m; ++k) {
      run += path[k] - drift;
      const double x1 = k + 1 == m ? 0.0 : run;
      if (x1 >= b || x1 <= a) return 0.0;
      weight *= 1.0 - std::exp(-2.0 * (b - x0) * (b - x1) / dt);
      weight *= 1.0 - std::exp(-2.0 * (x0 - a) * (x1 - a) / dt);
      x0 = x1;
    }
    return weight;
  };
  return mc_mean(config.batch, config.seed, config.workers, sample, density);
}

}  // namespace gintail
