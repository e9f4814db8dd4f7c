#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gintail/errors.hpp"
#include "gintail/quadrature.hpp"
#include "gintail/walk_lab.hpp"

namespace gintail {

namespace {

constexpr double kPi = std::numbers::pi;

thread_local std::vector<double> tl_path;

// Fills tl_path with the bridge values B_1..B_m (B_m forced to exactly 0) of
// a walk with N(0, sigma^2) increments conditioned on S_m = 0, realized as
// S_k - (k/m) S_m. Exact for Gaussian increments.
void draw_bridge(std::uint64_t m, double sigma, CounterRng& rng) {
  tl_path.resize(m);
  double s = 0.0;
  for (std::uint64_t k = 0; k < m; ++k) {
    tl_path[k] = sigma * rng.next_gaussian();
    s += tl_path[k];
  }
  const double drift = s / static_cast<double>(m);
  double run = 0.0;
  for (std::uint64_t k = 0; k < m; ++k) {
    run += tl_path[k] - drift;
    tl_path[k] = run;
  }
  tl_path[m - 1] = 0.0;
}

double endpoint_density(std::uint64_t m, double sigma2) {
  return 1.0 / std::sqrt(2.0 * kPi * static_cast<double>(m) * sigma2);
}

double odd_time_max(const std::vector<double>& path) {
  // times 1, 3, ..., m-1 are indices 0, 2, ...
  double mx = path[0];
  for (std::size_t i = 2; i + 1 < path.size(); i += 2) mx = std::max(mx, path[i]);
  return mx;
}

double even_time_min(const std::vector<double>& path) {
  double mn = 0.0;  // time 0
  for (std::size_t i = 1; i < path.size(); i += 2) mn = std::min(mn, path[i]);
  return mn;
}

// tau_0 = 2n on the bridge means every even time before 2n stays positive
// (the endpoint itself is 0 and always qualifies).
bool stopped_at_end(const std::vector<double>& path) {
  for (std::size_t i = 1; i + 1 < path.size(); i += 2)
    if (path[i] <= 0.0) return false;
  return true;
}

}  // namespace

McEstimate bridge_expectation(std::int64_t n, BridgeFunctional f, double L,
                              const WalkConfig& config) {
  if (n < 1) throw ValidationError("bridge_expectation: n must be positive");
  const std::uint64_t m = 2 * static_cast<std::uint64_t>(n);
  const double sigma = std::sqrt(config.increment_variance);
  const double density = endpoint_density(m, config.increment_variance);
  auto sample = [&](std::uint64_t, CounterRng& rng) -> double {
    draw_bridge(m, sigma, rng);
    const auto& p = tl_path;
    switch (f) {
      case BridgeFunctional::odd_max:
        return odd_time_max(p);
      case BridgeFunctional::even_min:
        return even_time_min(p);
      case BridgeFunctional::range_capped:
        return std::min(L, odd_time_max(p) - even_time_min(p));
      case BridgeFunctional::max_nonneg: {
        double mx = 0.0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) mx = std::max(mx, p[i]);
        return mx;
      }
      case BridgeFunctional::stopped_min_cap:
        return stopped_at_end(p) ? std::min(L, odd_time_max(p)) : 0.0;
    }
    return 0.0;
  };
  return mc_mean(config.batch, config.seed, config.workers, sample, density);
}

McEstimate kac_lhs(std::int64_t n, const WalkConfig& config) {
  if (n < 2) throw ValidationError("kac_lhs: n must be >= 2");
  const auto m = static_cast<std::uint64_t>(n);
  // Unit-variance increments; the quantity is scale invariant anyway.
  const double density = endpoint_density(m, 1.0);
  auto sample = [&](std::uint64_t, CounterRng& rng) -> double {
    draw_bridge(m, 1.0, rng);
    double mx = 0.0;
    for (std::size_t i = 0; i + 1 < tl_path.size(); ++i) mx = std::max(mx, tl_path[i]);
    return mx;
  };
  return mc_mean(config.batch, config.seed, config.workers, sample, density);
}

double kac_rhs(std::int64_t n, double quad_tol, double sigma2) {
  if (n < 2) throw ValidationError("kac_rhs: n must be >= 2");
  if (!(sigma2 > 0.0)) throw ValidationError("kac_rhs: sigma2 must be positive");
  double total = 0.0;
  for (std::int64_t k = 1; k < n; ++k) {
    const double a = static_cast<double>(k) * sigma2;
    const double b = static_cast<double>(n - k) * sigma2;
    auto integrand = [a, b](double x) {
      const double pa = std::exp(-x * x / (2.0 * a)) / std::sqrt(2.0 * kPi * a);
      const double pb = std::exp(-x * x / (2.0 * b)) / std::sqrt(2.0 * kPi * b);
      return x * pa * pb;
    };
    // The product density has scale sqrt(ab/(a+b)); 12 of those cover the mass.
    const double cut = 12.0 * std::sqrt(a * b / (a + b));
    const double integral = integrate(integrand, 0.0, cut, quad_tol).value;
    total += integral / (static_cast<double>(k) * static_cast<double>(n - k));
  }
  return 0.5 * static_cast<double>(n) * total;
}

McEstimate dyson_rhs(std::int64_t n, const WalkConfig& config) {
  if (n < 2) throw ValidationError("dyson_rhs: n must be >= 2");
  const auto m = static_cast<std::uint64_t>(n);
  const double density = endpoint_density(m, 1.0);
  auto sample = [&](std::uint64_t, CounterRng& rng) -> double {
    draw_bridge(m, 1.0, rng);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < tl_path.size(); ++i)
      if (tl_path[i] > 0.0) acc += tl_path[i] / static_cast<double>(i + 1);
    return acc;
  };
  return mc_mean(config.batch, config.seed, config.workers, sample, density);
}

CyclicCheck cyclic_check(std::int64_t n, double L, const WalkConfig& config) {
  if (n < 1) throw ValidationError("cyclic_check: n must be positive");
  CyclicCheck out;
  out.direct = bridge_expectation(n, BridgeFunctional::stopped_min_cap, L, config);
  WalkConfig shifted = config;
  shifted.seed = config.seed ^ 0x6a09e667f3bcc909ULL;  // independent stream family
  out.shifted = bridge_expectation(n, BridgeFunctional::range_capped, L, shifted);
  out.shifted.mean /= static_cast<double>(n);
  out.shifted.std_error /= static_cast<double>(n);
  return out;
}

std::uint64_t count_cyclic_shift_violations(std::int64_t n, const WalkConfig& config) {
  if (n < 1) throw ValidationError("count_cyclic_shift_violations: n must be positive");
  const std::uint64_t m = 2 * static_cast<std::uint64_t>(n);
  const double sigma = std::sqrt(config.increment_variance);
  McEstimate viol = mc_mean(
      config.batch, config.seed, config.workers,
      [&](std::uint64_t, CounterRng& rng) -> double {
        draw_bridge(m, sigma, rng);
        const auto& p = tl_path;
        // B_idx, with B_0 = B_{2n} = 0 (the bridge wraps through zero).
        auto value_at = [&p](std::uint64_t idx) { return idx == 0 ? 0.0 : p[idx - 1]; };
        int hits = 0;
        for (std::int64_t sh = 0; sh < n; ++sh) {
          // Shift by 2p: S^(2p)_k = B_{(k+2p) mod 2n} - B_{2p}; tau_0 = 2n means
          // every even time before 2n stays positive.
          const std::uint64_t off = 2 * static_cast<std::uint64_t>(sh);
          const double base = value_at(off);
          bool stopped_at_2n = true;
          for (std::uint64_t k = 2; k + 2 <= m; k += 2) {
            if (value_at((k + off) % m) - base <= 0.0) {
              stopped_at_2n = false;
              break;
            }
          }
          if (stopped_at_2n) ++hits;
        }
        return hits == 1 ? 0.0 : 1.0;
      });
  return static_cast<std::uint64_t>(
      std::llround(viol.mean * static_cast<double>(config.batch)));
}

McEstimate hoelder_diagnostic(std::int64_t n, double gamma, const WalkConfig& config) {
  if (n < 1) throw ValidationError("hoelder_diagnostic: n must be positive");
  if (!(gamma > 0.0 && gamma < 0.5))
    throw ValidationError("hoelder_diagnostic: gamma must lie in (0, 1/2)");
  const std::uint64_t m = 2 * static_cast<std::uint64_t>(n);
  const double sigma = std::sqrt(config.increment_variance);
  const double var_step = config.increment_variance;
  const double density = endpoint_density(m, config.increment_variance);
  auto sample = [&](std::uint64_t, CounterRng& rng) -> double {
    draw_bridge(m, sigma, rng);
    const auto& p = tl_path;
    double sup_disc = p[0];
    for (std::size_t i = 2; i + 1 < p.size(); i += 2) sup_disc = std::max(sup_disc, p[i]);
    // Continuum sup: per unit segment with endpoints (x0, x1) and variance v,
    // the conditional max is (x0 + x1 + sqrt((x0-x1)^2 - 2 v ln U)) / 2.
    double sup_cont = -1e308;
    double x0 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double x1 = p[i];
      const double d = x0 - x1;
      const double seg =
          0.5 * (x0 + x1 + std::sqrt(d * d - 2.0 * var_step * std::log(rng.next_unit())));
      sup_cont = std::max(sup_cont, seg);
      x0 = x1;
    }
    return (sup_cont - sup_disc) / static_cast<double>(n);
  };
  return mc_mean(config.batch, config.seed, config.workers, sample, density);
}

}  // namespace gintail
