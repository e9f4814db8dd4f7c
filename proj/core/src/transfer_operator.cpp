#include <cmath>
#include <numbers>

#include "gintail/errors.hpp"
#include "gintail/walk_lab.hpp"

namespace gintail {

namespace {

double normal_cdf(double x, double sigma) {
  return 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2));
}

}  // namespace

double GridDensity::total_mass() const {
  double s = 0.0;
  for (double m : mass) s += m;
  return s;
}

TransferOperator::TransferOperator(double L, const TransferParams& params,
                                   double increment_variance)
    : L_(L), sigma_(std::sqrt(increment_variance)) {
  if (!(L > 0.0)) throw ValidationError("transfer_exit: L must be positive");
  if (params.cells_per_L < 8) throw ValidationError("transfer_exit: grid too coarse");
  h_ = L / static_cast<double>(params.cells_per_L);
  band_ = static_cast<std::int64_t>(std::ceil(params.kernel_cut_sigmas * sigma_ / h_));

  // Between absorptions the live support overhangs each boundary by at most
  // one step reach, so two bands on each side cover everything.
  first_interior_ = 2 * band_;
  first_upper_ = first_interior_ + params.cells_per_L;
  cells_ = first_upper_ + 2 * band_;

  // Cell-integrated Gaussian step kernel, renormalized to unit mass.
  kernel_.resize(2 * band_ + 1);
  double sum = 0.0;
  for (std::int64_t j = -band_; j <= band_; ++j) {
    const double lo = (static_cast<double>(j) - 0.5) * h_;
    const double hi = (static_cast<double>(j) + 0.5) * h_;
    kernel_[j + band_] = normal_cdf(hi, sigma_) - normal_cdf(lo, sigma_);
    sum += kernel_[j + band_];
  }
  for (double& w : kernel_) w /= sum;
}

GridDensity TransferOperator::initial() const {
  GridDensity d;
  d.lower = -static_cast<double>(first_interior_) * h_;
  d.spacing = h_;
  d.parity = StepParity::odd_step;
  d.mass.assign(cells_, 0.0);
  for (std::int64_t i = 0; i < cells_; ++i) {
    const double lo = d.lower + static_cast<double>(i) * h_;
    d.mass[i] = normal_cdf(lo + h_, sigma_) - normal_cdf(lo, sigma_);
  }
  return d;
}

void TransferOperator::step(GridDensity& d) const {
  std::vector<double> out(cells_, 0.0);
  const std::int64_t w = band_;
  // The kernel is symmetric, so the correlation below equals the convolution
  // and the inner loop is a forward contiguous dot product.
  for (std::int64_t i = 0; i < cells_; ++i) {
    const std::int64_t jlo = std::max<std::int64_t>(0, i - w);
    const std::int64_t jhi = std::min<std::int64_t>(cells_ - 1, i + w);
    const std::int64_t len = jhi - jlo + 1;
    const double* src = d.mass.data() + jlo;
    const double* ker = kernel_.data() + (w + jlo - i);
    double acc = 0.0;
    for (std::int64_t k = 0; k < len; ++k) acc += src[k] * ker[k];
    out[i] = acc;
  }
  d.mass.swap(out);
  d.parity = d.parity == StepParity::odd_step ? StepParity::even_step : StepParity::odd_step;
}

double TransferOperator::absorb_upper(GridDensity& d) const {
  double taken = 0.0;
  for (std::int64_t i = first_upper_; i < cells_; ++i) {
    taken += d.mass[i];
    d.mass[i] = 0.0;
  }
  return taken;
}

double TransferOperator::absorb_lower(GridDensity& d) const {
  double taken = 0.0;
  for (std::int64_t i = 0; i < first_interior_; ++i) {
    taken += d.mass[i];
    d.mass[i] = 0.0;
  }
  return taken;
}

TransferResult transfer_exit(double L, const TransferParams& params,
                             double increment_variance) {
  TransferOperator op(L, params, increment_variance);
  GridDensity d = op.initial();
  TransferResult r;
  r.spacing = op.spacing();
  r.exit_prob = op.absorb_upper(d);  // step 1 is odd
  r.steps = 1;
  double live = d.total_mass();
  while (live > params.residual_tol && r.steps < params.max_steps) {
    op.step(d);
    r.death_prob += op.absorb_lower(d);
    op.step(d);
    r.exit_prob += op.absorb_upper(d);
    r.steps += 2;
    live = d.total_mass();
  }
  r.residual_mass = live;
  if (live > params.residual_tol)
    throw ConvergenceError("transfer_exit: residual mass above tolerance at max_steps");
  const double accounted = r.exit_prob + r.death_prob + r.residual_mass;
  if (std::fabs(1.0 - accounted) > params.mass_error_tol)
    throw ConvergenceError("transfer_exit: mass accounting error exceeds tolerance (grid too coarse)");
  return r;
}

}  // namespace gintail
