#pragma once

#include <cstdint>

namespace gintail {

enum class PnRegime { small_n, large_n };

// One summand of the decomposition over tau_0 = 2n, in whichever regime it
// was evaluated.
struct PnValue {
  std::int64_t n = 0;
  double L = 0.0;  // 0 when no cap was supplied
  double value = 0.0;
  PnRegime regime = PnRegime::small_n;
  double error_bound = 0.0;  // e1-type (small_n) or e2-type (large_n); 0-flagged when L unset
};

struct PredictionBreakdown {
  double L = 0.0;
  double leading = 0.0;             // -kappa L
  double constant = 0.0;            // C_e
  double predicted_log_prob = 0.0;  // leading + constant
  double predicted_prob = 0.0;
  const char* error_order = "o(L^{-1+})";
};

// Truncation bound on |p_n - small-n leading term| from capping the range at L:
//   e^{-2L^2/n} (1/sqrt(8 pi n L^2) + sqrt(2/(pi n^3)) L / (1 - e^{-2L^2/n})).
// Valid for every n; tightening 1 - e^{-2L^2/n} to 1 - e^{-2L^eps} recovers
// the epsilon-form used when n <= L^{2-eps}.
double e1_bound(std::int64_t n, double L);

// Walk-vs-Brownian discretization bound C n^{-3/2+gamma} at gamma = 0.1. The
// constant is a frozen 3x envelope of the measured |p_n(MC) - p_large| over
// n in [1e2, 1e4] at L = 10; test_predictor re-derives it.
double e2_bound(std::int64_t n);
inline constexpr double kE2Gamma = 0.1;
extern const double kE2Constant;

// Small-n regime: p_n ~ inner_sum(n) / (2 pi n).
PnValue p_small(std::int64_t n);
PnValue p_small(std::int64_t n, double L);

// Large-n regime: p_n ~ 1/(2n) - sqrt(2/(pi n^3)) L Omega(2L^2/(pi n)).
PnValue p_large(std::int64_t n, double L);

struct CutoffPolicy {
  // Sum p_large terms explicitly up to ~tail_start_multiplier * L^2, close the
  // rest with the integral comparison of the smooth summand.
  double tail_start_multiplier = 50.0;
};

// E(min(L, M_{tau_0}) delta_0(B_{tau_0})): small-n summands to floor(L^{2-eps}),
// large-n summands beyond, infinite tail closed by integral comparison.
double expectation_min_term(double L, double epsilon, const CutoffPolicy& policy = {});

// Scalar identity collapsing the assembled O(1) constant:
//   gamma/4 - log(2)/4 + I1/2 - I0/2 - log(2)/2
// with I1 = int_1^inf (1/(2x) - sqrt(2/(pi x^3)) Omega(2/(pi x))) dx and
// I0 = int_0^1 sqrt(2/(pi x^3)) Omega(2/(pi x)) dx. Must vanish.
double r_of_l_identity_check(double tol = 1e-9);

struct TailConstants {
  double kappa = 0.0;
  double c_edge = 0.0;
  std::int64_t cutoff = 0;
  double c_edge_tail_estimate = 0.0;
};

TailConstants compute_tail_constants(std::int64_t cutoff = 200000, unsigned workers = 0);

PredictionBreakdown predict(double L, const TailConstants& tc);
// Convenience overload; computes (and caches) constants at the default cutoff.
PredictionBreakdown predict(double L);

}  // namespace gintail
