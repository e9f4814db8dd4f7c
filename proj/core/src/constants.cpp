#include "gintail/constants.hpp"

#include <fftw3.h>

#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

#include "gintail/errors.hpp"
#include "gintail/special_fn.hpp"

namespace gintail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kFftThreshold = 8192;

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

// FFTW planning is not thread-safe; evaluations are serialized here.
std::mutex g_fftw_mutex;

// inner_sum(n) for n = 0..cutoff via one linear self-convolution of
// r_m = 1/sqrt(m): conv[n] = sum_{a+b=n} r_a r_b.
std::vector<double> inner_sums_fft(std::int64_t cutoff) {
  const std::int64_t m = cutoff - 1;  // r indices 1..m matter
  std::size_t size = 1;
  while (size < static_cast<std::size_t>(2 * m + 2)) size <<= 1;

  std::lock_guard<std::mutex> lock(g_fftw_mutex);
  double* buf = fftw_alloc_real(size);
  fftw_complex* spec = fftw_alloc_complex(size / 2 + 1);
  fftw_plan fwd = fftw_plan_dft_r2c_1d(static_cast<int>(size), buf, spec, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_dft_c2r_1d(static_cast<int>(size), spec, buf, FFTW_ESTIMATE);

  for (std::size_t i = 0; i < size; ++i) buf[i] = 0.0;
  for (std::int64_t a = 1; a <= m; ++a) buf[a] = 1.0 / std::sqrt(static_cast<double>(a));
  fftw_execute(fwd);
  for (std::size_t i = 0; i < size / 2 + 1; ++i) {
    const double re = spec[i][0], im = spec[i][1];
    spec[i][0] = re * re - im * im;
    spec[i][1] = 2.0 * re * im;
  }
  fftw_execute(bwd);

  std::vector<double> inner(cutoff + 1, 0.0);
  const double scale = 1.0 / static_cast<double>(size);
  for (std::int64_t n = 2; n <= cutoff; ++n) inner[n] = buf[n] * scale;

  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  fftw_free(buf);
  fftw_free(spec);
  return inner;
}

std::vector<double> inner_sums_pairing(std::int64_t cutoff, unsigned workers) {
  std::vector<double> rsqrt(cutoff + 1, 0.0);
  for (std::int64_t i = 1; i <= cutoff; ++i) rsqrt[i] = 1.0 / std::sqrt(static_cast<double>(i));

  std::vector<double> inner(cutoff + 1, 0.0);
  constexpr std::int64_t kBlock = 512;
  const std::int64_t n_blocks = (cutoff + kBlock - 1) / kBlock;
  std::atomic<std::int64_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      const std::int64_t lo = b * kBlock + 1;
      const std::int64_t hi = std::min(cutoff, lo + kBlock - 1);
      for (std::int64_t n = std::max<std::int64_t>(2, lo); n <= hi; ++n) {
        double s = 0.0;
        const std::int64_t half = (n - 1) / 2;
        for (std::int64_t m = 1; m <= half; ++m) s += rsqrt[m] * rsqrt[n - m];
        s *= 2.0;
        if (n % 2 == 0) s += 2.0 / static_cast<double>(n);
        inner[n] = s;
      }
    }
  };
  const unsigned nw = resolve_workers(workers);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nw; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return inner;
}

// Least-squares coefficient of the n^{-3/2} model over the last decade of
// terms; the tail beyond the cutoff is then a * sum_{n>cutoff} n^{-3/2}.
double fit_tail_coefficient(std::span<const double> terms) {
  const std::int64_t cutoff = static_cast<std::int64_t>(terms.size());
  const std::int64_t lo = std::max<std::int64_t>(2, cutoff / 10);
  double num = 0.0, den = 0.0;
  for (std::int64_t n = lo; n <= cutoff; ++n) {
    const double w = std::pow(static_cast<double>(n), -1.5);
    num += terms[n - 1] * w;
    den += w * w;
  }
  return num / den;
}

ConstantResult assemble(std::span<const double> terms, TailMode mode, double leading) {
  const std::int64_t cutoff = static_cast<std::int64_t>(terms.size());
  double series = 0.0;
  for (double t : terms) series += t;
  const double a = fit_tail_coefficient(terms);
  const double tail = a * zeta32_tail(static_cast<double>(cutoff));
  ConstantResult r;
  r.cutoff = cutoff;
  r.method = mode;
  r.tail_estimate = std::fabs(tail) / (4.0 * kPi);
  const double corrected = mode == TailMode::tail_corrected ? series + tail : series;
  r.value = leading + corrected / (4.0 * kPi);
  return r;
}

}  // namespace

double inner_sum(std::int64_t n) {
  if (n < 1) throw ValidationError("inner_sum: n must be positive");
  if (n == 1) return 0.0;
  double s = 0.0;
  const std::int64_t half = (n - 1) / 2;
  for (std::int64_t m = 1; m <= half; ++m)
    s += 2.0 / std::sqrt(static_cast<double>(m) * static_cast<double>(n - m));
  if (n % 2 == 0) s += 2.0 / static_cast<double>(n);
  return s;
}

SeriesTerm series_term(std::int64_t n) {
  const double s = inner_sum(n);
  return {n, s, (s - kPi) / static_cast<double>(n)};
}

std::vector<double> series_terms(std::int64_t cutoff, unsigned workers) {
  if (cutoff < 1) throw ValidationError("series_terms: cutoff must be positive");
  std::vector<double> inner = cutoff > kFftThreshold ? inner_sums_fft(cutoff)
                                                     : inner_sums_pairing(cutoff, workers);
  std::vector<double> terms(cutoff);
  for (std::int64_t n = 1; n <= cutoff; ++n)
    terms[n - 1] = (inner[n] - kPi) / static_cast<double>(n);
  return terms;
}

ConstantResult c_edge(std::span<const double> terms, TailMode mode) {
  if (terms.size() < 2) throw ValidationError("c_edge: cutoff must be >= 2");
  return assemble(terms, mode, 0.5 * std::log(2.0));
}

ConstantResult c_edge(std::int64_t cutoff, TailMode mode, unsigned workers) {
  if (cutoff < 2) throw ValidationError("c_edge: cutoff must be >= 2");
  return c_edge(std::span<const double>(series_terms(cutoff, workers)), mode);
}

ConstantResult c_bulk(std::span<const double> terms, TailMode mode) {
  if (terms.size() < 2) throw ValidationError("c_bulk: cutoff must be >= 2");
  return assemble(terms, mode, std::log(2.0));
}

ConstantResult c_bulk(std::int64_t cutoff, TailMode mode, unsigned workers) {
  if (cutoff < 2) throw ValidationError("c_bulk: cutoff must be >= 2");
  return c_bulk(std::span<const double>(series_terms(cutoff, workers)), mode);
}

double kappa() {
  static const double value =
      zeta_three_halves({1e-14, 1 << 20}).value / (2.0 * std::sqrt(2.0 * kPi));
  return value;
}

}  // namespace gintail
