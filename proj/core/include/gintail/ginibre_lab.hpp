#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "gintail/stats.hpp"

namespace gintail {

struct EigenSample {
  int n = 0;
  double lambda_max_shifted = std::numeric_limits<double>::quiet_NaN();
  int n_real = 0;  // always congruent to n mod 2
  std::uint64_t seed = 0;
  bool valid = true;  // false when the Schur iteration failed to converge
};

enum class GinibreMethod {
  // iid N(0,1) matrix, Householder reduction, then the real Schur iteration
  dense_schur,
  // Samples the Hessenberg form directly: upper triangle iid N(0,1),
  // subdiagonal independent chi_{n-1}, ..., chi_1. Distribution-exact (the
  // Householder reduction of an iid Gaussian matrix lands there), skips the
  // O(n^3) reduction. Cross-validated against dense_schur in the tests.
  hessenberg_direct,
};

struct GinibreConfig {
  int n = 256;
  std::uint64_t count = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  GinibreMethod method = GinibreMethod::dense_schur;
  // A conjugate pair from a 2x2 Schur block with |Im| < realness_tol * sqrt(n)
  // is treated as a degenerate real pair.
  double realness_tol = 1e-8;
};

// One EigenSample per matrix, in sample order; reproducible for fixed
// (n, seed, count) regardless of worker count. Samples whose Schur iteration
// did not converge are flagged invalid and carry no eigenvalue.
std::vector<EigenSample> sample_ginibre(const GinibreConfig& config);

// Shifted lambda_max values of the valid samples that have at least one real
// eigenvalue; `no_real` (optional) receives the count of valid samples with
// none (those satisfy the gap event at every L).
std::vector<double> lambda_max_values(const std::vector<EigenSample>& samples,
                                      std::uint64_t* no_real = nullptr,
                                      std::uint64_t* invalid = nullptr);

// Empirical tail of the shifted largest real eigenvalue.
TailCurve ginibre_tail_curve(const std::vector<EigenSample>& samples,
                             std::span<const double> L_grid,
                             std::uint64_t min_count = 25);

}  // namespace gintail
