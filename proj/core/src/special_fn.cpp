#include "gintail/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gintail/errors.hpp"
#include "gintail/quadrature.hpp"

namespace gintail {

namespace {
constexpr double kPi = std::numbers::pi;
}

SpecialValue omega_direct(double t, const Tolerance& tol) {
  if (!(t > 0.0)) throw ValidationError("omega: t must be positive");
  double sum = 0.0;
  int k = 0;
  double bound;
  for (;;) {
    ++k;
    sum += std::exp(-kPi * static_cast<double>(k) * k * t);
    // Tail after k terms: with K = k+1 first omitted index,
    //   sum_{j>=K} e^{-pi j^2 t} <= e^{-pi K^2 t} / (1 - e^{-pi (2K+1) t}).
    const double K = k + 1.0;
    bound = std::exp(-kPi * K * K * t) / (1.0 - std::exp(-kPi * (2.0 * K + 1.0) * t));
    if (bound <= tol.abs_tol) break;
    if (k >= tol.max_terms)
      throw ConvergenceError("omega: tolerance unreachable within max_terms");
  }
  return {sum, bound, k};
}

SpecialValue omega(double t, const Tolerance& tol) {
  if (!(t > 0.0)) throw ValidationError("omega: t must be positive");
  if (t >= 0.2) return omega_direct(t, tol);
  // Modular route: Omega(t) = ((1 + 2 Omega(1/t)) / sqrt(t) - 1) / 2 with
  // 1/t >= 5, where the raw sum needs O(1) terms.
  const double rt = std::sqrt(t);
  Tolerance inner = tol;
  inner.abs_tol = std::max(tol.abs_tol * rt * 0.5, 1e-300);
  const SpecialValue far = omega_direct(1.0 / t, inner);
  const double value = ((1.0 + 2.0 * far.value) / rt - 1.0) / 2.0;
  return {value, far.tail_bound / rt, far.terms_used};
}

double zeta32_tail(double n_cutoff) {
  // Euler-Maclaurin for f(x) = x^{-3/2}:
  //   sum_{n>N} n^{-3/2} = 2 N^{-1/2} - N^{-3/2}/2 + N^{-5/2}/8 - (105/5760) N^{-9/2} + ...
  const double N = n_cutoff;
  return 2.0 / std::sqrt(N) - 0.5 * std::pow(N, -1.5) + 0.125 * std::pow(N, -2.5) -
         (105.0 / 5760.0) * std::pow(N, -4.5);
}

SpecialValue zeta_three_halves(const Tolerance& tol) {
  // The first dropped Euler-Maclaurin term is ~0.018 N^{-9/2}; pick N so that
  // twice that clears the tolerance.
  const double need = std::pow(0.04 / std::max(tol.abs_tol, 1e-15), 2.0 / 9.0);
  const int N = std::max(64, static_cast<int>(std::ceil(need)));
  if (N > tol.max_terms)
    throw ConvergenceError("zeta_three_halves: max_terms insufficient for tolerance");
  double sum = 0.0;
  for (int n = N; n >= 1; --n) sum += std::pow(static_cast<double>(n), -1.5);
  const double value = sum + zeta32_tail(N);
  const double bound = 2.0 * (105.0 / 5760.0) * std::pow(static_cast<double>(N), -4.5);
  return {value, bound, N};
}

SpecialValue euler_mascheroni_theta(const Tolerance& tol) {
  // Truncate the integral at T with the tail bounded through
  // Omega(t) <= e^{-pi t} / (1 - e^{-pi t}):
  //   2 int_T^inf (1+sqrt(t)) Omega(t)/t dt <= 2 (1+sqrt(T))/T e^{-pi T} / (pi (1 - e^{-pi T})).
  double T = 10.0;
  auto tail_at = [](double x) {
    return 2.0 * (1.0 + std::sqrt(x)) / x * std::exp(-kPi * x) /
           (kPi * (1.0 - std::exp(-kPi * x)));
  };
  while (tail_at(T) > 0.1 * tol.abs_tol && T < 400.0) T += 2.0;
  const double tail_bound = tail_at(T);

  Tolerance inner;
  inner.abs_tol = std::max(tol.abs_tol / 64.0, 1e-16);
  auto integrand = [&inner](double t) {
    return (1.0 + std::sqrt(t)) * omega_direct(t, inner).value / t;
  };
  const QuadratureResult q = integrate(integrand, 1.0, T, tol.abs_tol / 4.0);
  const double value = std::log(4.0 * kPi) - 2.0 + 2.0 * q.value;
  return {value, tail_bound + 2.0 * q.error_estimate, static_cast<int>(q.evaluations)};
}

double check_modular(double t, const Tolerance& tol) {
  if (!(t > 0.0)) throw ValidationError("check_modular: t must be positive");
  const SpecialValue near = omega_direct(t, tol);
  const SpecialValue far = omega_direct(1.0 / t, tol);
  return (1.0 + 2.0 * far.value) - std::sqrt(t) * (1.0 + 2.0 * near.value);
}

}  // namespace gintail
