#include "gintail/mc.hpp"

#include <cmath>

namespace gintail {

McEstimate McAccumulator::finalize(std::uint64_t seed, double scale) const {
  McEstimate e;
  e.n_samples = n;
  e.seed = seed;
  if (n == 0) return e;
  const double mean = sum / static_cast<double>(n);
  e.mean = scale * mean;
  if (n > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * mean) / static_cast<double>(n - 1));
    e.std_error = std::fabs(scale) * std::sqrt(var / static_cast<double>(n));
  }
  return e;
}

}  // namespace gintail
