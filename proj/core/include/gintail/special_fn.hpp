#pragma once

#include <cstdint>

namespace gintail {

// Accuracy request for the scalar special functions. Every result carries an
// explicit truncation bound so downstream consumers can propagate error
// budgets instead of guessing.
struct Tolerance {
  double abs_tol = 1e-12;
  int max_terms = 100000;
};

struct SpecialValue {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous bound on the truncation error
  int terms_used = 0;
};

// Omega(t) = sum_{k>=1} exp(-pi k^2 t), t > 0. The theta-type sum behind the
// large-n tail of the walk range law. For t < 0.2 the raw sum converges
// slowly, so the value is produced through the modular identity
//   1 + 2 Omega(1/t) = sqrt(t) (1 + 2 Omega(t))
// from a fast evaluation at 1/t.
SpecialValue omega(double t, const Tolerance& tol = {});

// Raw summation for any t > 0, no modular shortcut. Used by check_modular so
// the identity is exercised on two independently summed sides, and by callers
// that already sit in the fast regime.
SpecialValue omega_direct(double t, const Tolerance& tol = {});

// zeta(3/2) = sum_{n>=1} n^{-3/2}, via partial sum plus the Euler-Maclaurin
// tail (integral term 2/sqrt(N) and refinements).
SpecialValue zeta_three_halves(const Tolerance& tol = {});

// Tail sum_{n>N} n^{-3/2} by Euler-Maclaurin. Shared by zeta_three_halves and
// the series tail corrections in the constants module.
double zeta32_tail(double n_cutoff);

// Euler-Mascheroni constant through the theta integral
//   gamma = log(4 pi) - 2 + 2 int_1^inf (1 + sqrt(t)) Omega(t) / t dt.
SpecialValue euler_mascheroni_theta(const Tolerance& tol = {});

// Signed residual (1 + 2 Omega(1/t)) - sqrt(t) (1 + 2 Omega(t)). Both sides
// are raw sums; the magnitude is bounded by the combined truncation bounds.
double check_modular(double t, const Tolerance& tol = {1e-14, 100000});

}  // namespace gintail
