#pragma once

#include <cstdint>
#include <vector>

#include "gintail/mc.hpp"

namespace gintail {

struct WalkConfig {
  double increment_variance = 0.5;        // 1/2 for the edge walk, 1 for the Kac walk
  std::uint64_t max_horizon = 1ull << 22;  // hard cap on steps before truncation
  std::uint64_t seed = 1;
  std::uint64_t batch = 100000;  // number of walks / bridges
  unsigned workers = 0;          // 0 = hardware concurrency
};

// Stopping data of one walk. tau_0 is the first even time the walk is <= 0,
// tau_L the first odd time it is >= L when that happens before tau_0.
struct StopRecord {
  std::uint64_t tau_L = 0;  // 0 = did not occur before tau_0 / truncation
  std::uint64_t tau_0 = 0;  // 0 = truncated at the horizon
  double odd_max = 0.0;     // sup over odd times < stopping time (time 1 always included)
  double even_min = 0.0;    // inf over even times <= stopping time, time 0 included
  double endpoint = 0.0;    // value at tau_0, or at the horizon when truncated
  bool truncated = false;
};

struct WalkSampleSummary {
  std::vector<StopRecord> records;  // one per sample, in sample order
  double truncated_fraction = 0.0;
  std::uint64_t final_horizon = 0;
};

// Samples config.batch independent walks. The horizon starts at
// initial_horizon and doubles until the truncated fraction is below
// truncated_target (or config.max_horizon is reached); truncated records are
// kept and flagged, never dropped. Per-sample RNG streams make the result
// independent of the worker count, including across horizon regrowth.
WalkSampleSummary sample_walks(const WalkConfig& config, double L,
                               std::uint64_t initial_horizon = 1ull << 12,
                               double truncated_target = 1e-3);

struct ExitEstimate {
  McEstimate probability;
  double truncated_fraction = 0.0;
};

// Direct MC of P(tau_L < tau_0); each walk runs to the first decisive time.
ExitEstimate exit_probability_mc(const WalkConfig& config, double L);

// --- deterministic transfer-operator solver --------------------------------

enum class StepParity { even_step, odd_step };

// Sub-probability mass on a uniform grid; cell i is centered at
// lower + (i + 1/2) spacing.
struct GridDensity {
  double lower = 0.0;
  double spacing = 0.0;
  std::vector<double> mass;
  StepParity parity = StepParity::odd_step;

  double total_mass() const;
  double upper() const { return lower + spacing * static_cast<double>(mass.size()); }
};

struct TransferParams {
  std::int64_t cells_per_L = 2000;  // h = L / cells_per_L
  double kernel_cut_sigmas = 8.0;
  double residual_tol = 1e-9;  // stop once live mass is below this
  std::uint64_t max_steps = 200000;
  double mass_error_tol = 1e-7;  // accounting error budget (grid-too-coarse guard)
};

struct TransferResult {
  double exit_prob = 0.0;      // mass absorbed at >= L after odd steps
  double death_prob = 0.0;     // mass absorbed at <= 0 after even steps
  double residual_mass = 0.0;  // live mass at stop
  std::uint64_t steps = 0;
  double spacing = 0.0;
};

// Alternating convolve/absorb evolution of the walk density. The grid spans
// one full step reach beyond each absorbing boundary so no live mass is ever
// clipped; absorption at >= L applies after odd steps, at <= 0 after even
// steps, and absorbed mass is accumulated until the live remainder is below
// residual_tol.
class TransferOperator {
 public:
  TransferOperator(double L, const TransferParams& params = {},
                   double increment_variance = 0.5);

  // Density after the first (odd) step, before any absorption.
  GridDensity initial() const;
  // One convolution step; flips parity.
  void step(GridDensity& d) const;
  // Removes and returns the mass at >= L (respectively <= 0).
  double absorb_upper(GridDensity& d) const;
  double absorb_lower(GridDensity& d) const;

  double spacing() const { return h_; }

 private:
  double L_;
  double h_;
  double sigma_;
  std::int64_t band_;            // kernel half-width in cells
  std::int64_t cells_;           // total cells
  std::int64_t first_interior_;  // first cell with center > 0
  std::int64_t first_upper_;     // first cell with center > L
  std::vector<double> kernel_;
};

TransferResult transfer_exit(double L, const TransferParams& params = {},
                             double increment_variance = 0.5);

// --- bridge-conditioned expectations ----------------------------------------

enum class BridgeFunctional {
  odd_max,          // M_{2n}
  even_min,         // m_{2n}
  range_capped,     // min(L, M_{2n} - m_{2n})
  max_nonneg,       // max(0, S_1, ..., S_{2n-1})
  stopped_min_cap,  // 1(tau_0 = 2n) min(L, M_{2n})
};

// E(f * delta_0(S_{2n})) by exact Gaussian bridge conditioning: the
// conditioned path is S_k - (k/2n) S_{2n} and the estimate is the conditional
// mean times the endpoint density 1/sqrt(2 pi 2n sigma^2). L is ignored by
// functionals that do not cap.
McEstimate bridge_expectation(std::int64_t n, BridgeFunctional f, double L,
                              const WalkConfig& config);

// rho^(n)(0) E(max(0, S_1, ..., S_{n-1}) | S_n = 0) for the unit-variance walk.
McEstimate kac_lhs(std::int64_t n, const WalkConfig& config);

// (n/2) int_0^inf x sum_{k<n} rho^(k)(x) rho^(n-k)(x) / (k(n-k)) dx by
// quadrature. For Gaussian rho each term has the closed form
// sqrt(ab)/(2 pi (a+b)) with a = k sigma^2, b = (n-k) sigma^2, used as an
// internal cross-check; the value is scale invariant in sigma^2.
double kac_rhs(std::int64_t n, double quad_tol = 1e-10, double sigma2 = 1.0);

// Telescoped form of the same conditional maximum:
// sum_{k<n} (1/k) E(1(S_k > 0) S_k | S_n = 0) rho^(n)(0).
McEstimate dyson_rhs(std::int64_t n, const WalkConfig& config);

struct CyclicCheck {
  McEstimate direct;   // E(min(L, M_{2n}) 1(tau_0 = 2n) delta_0(S_{2n}))
  McEstimate shifted;  // (1/n) E(min(L, M_{2n} - m_{2n}) delta_0(S_{2n}))
};

// The two p_n(L) estimators related by cyclic shift invariance, evaluated on
// independent sample streams.
CyclicCheck cyclic_check(std::int64_t n, double L, const WalkConfig& config);

// Number of bridges (out of config.batch) for which the number of even cyclic
// shifts with tau_0 = 2n differs from one.
std::uint64_t count_cyclic_shift_violations(std::int64_t n, const WalkConfig& config);

// (1/n) E(|sup_{[0,2n]} B - sup_{odd} B| delta_0(B_{2n})): the discretization
// gap behind the large-n error bound. Per-segment suprema are drawn from the
// exact conditional law, so no time-refinement bias enters. gamma is the
// exponent offset being probed and must lie in (0, 1/2).
McEstimate hoelder_diagnostic(std::int64_t n, double gamma, const WalkConfig& config);

// --- trivariate endpoint density --------------------------------------------

// Density at 0 of standard Brownian motion at time t killed outside [a, b]:
//   sum_{|k|<=K} (1/sqrt(2 pi t)) (e^{-2 k^2 (b-a)^2 / t} - e^{-2 (b - k(b-a))^2 / t}),
// a <= 0 <= b. K < 0 picks the truncation from the exponential tail bound.
double trivariate_density(double a, double b, double t, int K = -1);

// Path-MC oracle for the same quantity: discretized Brownian bridge with
// per-segment barrier-crossing corrections for both walls.
McEstimate trivariate_mc(double a, double b, double t, std::int64_t n_steps,
                         const WalkConfig& config);

}  // namespace gintail
