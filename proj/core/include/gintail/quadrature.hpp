#pragma once

#include <functional>

namespace gintail {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive Simpson integration of f over [a, b] to an absolute tolerance.
// Throws ConvergenceError if the evaluation budget runs out before the
// tolerance is met. Intended for smooth integrands; the callers in this
// library only hand it analytic functions with known decay.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, long max_evaluations = 2'000'000);

}  // namespace gintail
