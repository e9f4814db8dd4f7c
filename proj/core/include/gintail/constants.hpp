#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gintail {

enum class TailMode { raw, tail_corrected };

struct SeriesTerm {
  std::int64_t n = 0;
  double inner_sum = 0.0;  // sum_{m=1}^{n-1} 1/sqrt(m(n-m))
  double term = 0.0;       // (inner_sum - pi) / n
};

struct ConstantResult {
  double value = 0.0;
  std::int64_t cutoff = 0;
  double tail_estimate = 0.0;  // magnitude of the fitted n^{-3/2} tail, in result units
  TailMode method = TailMode::raw;
};

// Exact finite sum sum_{m=1}^{n-1} 1/sqrt(m(n-m)); 0 for n = 1. Uses the
// symmetric pairing (m, n-m) so only n/2 terms are evaluated.
double inner_sum(std::int64_t n);

SeriesTerm series_term(std::int64_t n);

// All series terms t_n = (inner_sum(n) - pi)/n for n = 1..cutoff, in index
// order. Small cutoffs are evaluated by direct pairing, parallel over blocks
// of n with a deterministic indexed reduction; large cutoffs go through an
// FFT self-convolution of the 1/sqrt(m) sequence, which produces every inner
// sum at once. Both backends give bitwise-reproducible output for a fixed
// cutoff regardless of worker count.
std::vector<double> series_terms(std::int64_t cutoff, unsigned workers = 0);

// C_e = log(2)/2 + (1/4pi) sum_n t_n, optionally with the fitted tail.
ConstantResult c_edge(std::span<const double> terms, TailMode mode);
ConstantResult c_edge(std::int64_t cutoff, TailMode mode, unsigned workers = 0);

// C_b = log(2) + the same series; C_b - C_e == log(2)/2 at every cutoff.
ConstantResult c_bulk(std::span<const double> terms, TailMode mode);
ConstantResult c_bulk(std::int64_t cutoff, TailMode mode, unsigned workers = 0);

// Leading tail slope kappa = zeta(3/2) / (2 sqrt(2 pi)).
double kappa();

}  // namespace gintail
