#include "gintail/quadrature.hpp"

#include <cmath>

#include "gintail/errors.hpp"

namespace gintail {
namespace {

struct Workspace {
  const std::function<double(double)>& f;
  long evals = 0;
  long budget;
  double err_acc = 0.0;

  double eval(double x) {
    if (++evals > budget)
      throw ConvergenceError("adaptive quadrature: evaluation budget exhausted");
    return f(x);
  }
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(Workspace& ws, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = ws.eval(lm);
  const double frm = ws.eval(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0) throw ConvergenceError("adaptive quadrature: max depth reached");
  if (std::fabs(delta) <= 15.0 * tol) {
    ws.err_acc += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;  // Richardson extrapolation
  }
  return adapt(ws, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(ws, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, long max_evaluations) {
  if (!(abs_tol > 0.0)) throw ValidationError("integrate: abs_tol must be positive");
  if (a == b) return {0.0, 0.0, 0};
  Workspace ws{f, 0, max_evaluations};
  const double fa = ws.eval(a);
  const double m = 0.5 * (a + b);
  const double fm = ws.eval(m);
  const double fb = ws.eval(b);
  const double whole = simpson(fa, fm, fb, b - a);
  const double value = adapt(ws, a, b, fa, fm, fb, whole, abs_tol, 60);
  return {value, ws.err_acc, ws.evals};
}

}  // namespace gintail
