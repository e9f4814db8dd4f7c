#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gintail {

// Empirical log P(X < -L) over a grid, masked (NaN) wherever the event count
// is below min_count.
struct TailCurve {
  std::vector<double> L_grid;
  std::vector<double> log_prob;
  std::vector<double> std_error;  // delta-method stderr of log_prob
  std::vector<std::uint64_t> event_counts;
  std::uint64_t n_samples = 0;
  std::uint64_t min_count = 25;
};

// `values` are the finite per-sample statistics; `n_total` the number of
// trials; `extra_events` counts degenerate trials (no particle / no real
// eigenvalue) that satisfy the gap event at every L.
TailCurve tail_curve(std::span<const double> values, std::span<const double> L_grid,
                     std::uint64_t n_total, std::uint64_t extra_events = 0,
                     std::uint64_t min_count = 25);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

// Two-sample Kolmogorov-Smirnov test (asymptotic p-value with the small-sample
// effective-size correction).
KsResult two_sample_ks(std::vector<double> a, std::vector<double> b);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Least-squares slope of log_prob against L over the unmasked grid points
// inside [L_lo, L_hi]. Returns the number of points used through `n_used`.
LineFit fit_tail_slope(const TailCurve& curve, double L_lo, double L_hi,
                       std::size_t* n_used = nullptr);

double median(std::vector<double> v);

}  // namespace gintail
