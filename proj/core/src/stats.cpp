#include "gintail/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gintail/errors.hpp"

namespace gintail {

TailCurve tail_curve(std::span<const double> values, std::span<const double> L_grid,
                     std::uint64_t n_total, std::uint64_t extra_events,
                     std::uint64_t min_count) {
  if (L_grid.empty()) throw ValidationError("tail_curve: empty L grid");
  if (n_total == 0) throw ValidationError("tail_curve: no samples");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  TailCurve c;
  c.n_samples = n_total;
  c.min_count = min_count;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (double L : L_grid) {
    // count of samples with value < -L
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), -L);
    const std::uint64_t count =
        static_cast<std::uint64_t>(it - sorted.begin()) + extra_events;
    c.L_grid.push_back(L);
    c.event_counts.push_back(count);
    if (count < min_count || count == n_total) {
      c.log_prob.push_back(nan);
      c.std_error.push_back(nan);
      continue;
    }
    const double p = static_cast<double>(count) / static_cast<double>(n_total);
    c.log_prob.push_back(std::log(p));
    c.std_error.push_back(std::sqrt((1.0 - p) / static_cast<double>(count)));
  }
  return c;
}

KsResult two_sample_ks(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw ValidationError("two_sample_ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  const double lambda = (ne + 0.12 + 0.11 / ne) * d;
  // Q_KS(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2)
  double p = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 101; ++k) {
    const double term = std::exp(-2.0 * lambda * lambda * k * k);
    p += 2.0 * sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  KsResult r;
  r.statistic = d;
  r.p_value = std::clamp(p, 0.0, 1.0);
  r.n1 = a.size();
  r.n2 = b.size();
  return r;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ValidationError("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  LineFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

LineFit fit_tail_slope(const TailCurve& curve, double L_lo, double L_hi,
                       std::size_t* n_used) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < curve.L_grid.size(); ++i) {
    const double L = curve.L_grid[i];
    if (L < L_lo - 1e-12 || L > L_hi + 1e-12) continue;
    if (!std::isfinite(curve.log_prob[i])) continue;
    xs.push_back(L);
    ys.push_back(curve.log_prob[i]);
  }
  if (n_used) *n_used = xs.size();
  return fit_line(xs, ys);
}

double median(std::vector<double> v) {
  if (v.empty()) throw ValidationError("median: empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace gintail
