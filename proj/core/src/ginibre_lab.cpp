#include "gintail/ginibre_lab.hpp"

#include <lapacke.h>

#include <cmath>
#include <mutex>

#include "gintail/errors.hpp"
#include "gintail/mc.hpp"
#include "gintail/rng.hpp"

extern "C" void openblas_set_num_threads(int);

namespace gintail {

namespace {

void pin_blas_threads() {
  // Parallelism lives across samples; nested BLAS threading would destroy
  // both throughput and the per-sample timing balance.
  static std::once_flag flag;
  std::call_once(flag, [] { openblas_set_num_threads(1); });
}

struct Workspace {
  std::vector<double> a;     // n x n, column major
  std::vector<double> tau;   // reflectors
  std::vector<double> wr, wi;
  std::vector<double> work;
};

thread_local Workspace tl_ws;

// chi_k variate as the norm of k iid standard normals. O(n^2) total for one
// Hessenberg sample, which is noise next to the Schur iteration.
double chi(int dof, CounterRng& rng) {
  double s = 0.0;
  for (int i = 0; i < dof; ++i) {
    const double z = rng.next_gaussian();
    s += z * z;
  }
  return std::sqrt(s);
}

// Fills ws.a with an upper Hessenberg matrix whose eigenvalue law is that of
// the iid N(0,1) ensemble: Householder reduction of such a matrix leaves the
// upper triangle iid N(0,1) and makes the subdiagonal independent
// chi_{n-1}, ..., chi_1 (sign fixed by a diagonal similarity).
void fill_hessenberg(int n, CounterRng& rng, Workspace& ws) {
  ws.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double* col = ws.a.data() + static_cast<std::size_t>(j) * n;
    for (int i = 0; i <= j; ++i) col[i] = rng.next_gaussian();
    if (j + 1 < n) col[j + 1] = chi(n - 1 - j, rng);
  }
}

void fill_dense(int n, CounterRng& rng, Workspace& ws) {
  ws.a.resize(static_cast<std::size_t>(n) * n);
  for (auto& x : ws.a) x = rng.next_gaussian();
}

EigenSample solve_one(const GinibreConfig& cfg, std::uint64_t index) {
  const int n = cfg.n;
  Workspace& ws = tl_ws;
  CounterRng rng(cfg.seed, index);

  ws.wr.resize(n);
  ws.wi.resize(n);
  // Generous workspace keeps dgehrd at its preferred block size and covers
  // the dhseqr AED path.
  const lapack_int lwork = 64 * n;
  ws.work.resize(lwork);

  lapack_int info = 0;
  if (cfg.method == GinibreMethod::dense_schur) {
    fill_dense(n, rng, ws);
    ws.tau.resize(n);
    info = LAPACKE_dgehrd_work(LAPACK_COL_MAJOR, n, 1, n, ws.a.data(), n,
                               ws.tau.data(), ws.work.data(), lwork);
  } else {
    fill_hessenberg(n, rng, ws);
  }
  if (info == 0) {
    info = LAPACKE_dhseqr_work(LAPACK_COL_MAJOR, 'E', 'N', n, 1, n, ws.a.data(), n,
                               ws.wr.data(), ws.wi.data(), nullptr, 1,
                               ws.work.data(), lwork);
  }

  EigenSample s;
  s.n = n;
  s.seed = cfg.seed;
  if (info != 0) {
    s.valid = false;
    return s;
  }

  const double degenerate_cut = cfg.realness_tol * std::sqrt(static_cast<double>(n));
  double best = -std::numeric_limits<double>::infinity();
  int n_real = 0;
  for (int i = 0; i < n; ++i) {
    if (ws.wi[i] == 0.0) {
      ++n_real;
      best = std::max(best, ws.wr[i]);
    } else if (std::fabs(ws.wi[i]) < degenerate_cut) {
      // Conjugate pair grazing the axis: count both members as real.
      n_real += 2;
      best = std::max(best, ws.wr[i]);
      ++i;  // skip the partner
    } else {
      ++i;
    }
  }
  s.n_real = n_real;
  if (n_real > 0) s.lambda_max_shifted = best - std::sqrt(static_cast<double>(n));
  return s;
}

}  // namespace

std::vector<EigenSample> sample_ginibre(const GinibreConfig& config) {
  if (config.n < 2) throw ValidationError("sample_ginibre: n must be >= 2");
  if (config.count == 0) throw ValidationError("sample_ginibre: count must be positive");
  pin_blas_threads();
  auto blocks = run_blocks<EigenSample>(config.count, config.workers,
                                        [&](std::uint64_t b) { return solve_one(config, b); });
  return blocks;
}

std::vector<double> lambda_max_values(const std::vector<EigenSample>& samples,
                                      std::uint64_t* no_real, std::uint64_t* invalid) {
  std::vector<double> out;
  std::uint64_t none = 0, bad = 0;
  for (const auto& s : samples) {
    if (!s.valid) {
      ++bad;
      continue;
    }
    if (s.n_real == 0) {
      ++none;
      continue;
    }
    out.push_back(s.lambda_max_shifted);
  }
  if (no_real) *no_real = none;
  if (invalid) *invalid = bad;
  return out;
}

TailCurve ginibre_tail_curve(const std::vector<EigenSample>& samples,
                             std::span<const double> L_grid, std::uint64_t min_count) {
  std::uint64_t none = 0, bad = 0;
  const std::vector<double> values = lambda_max_values(samples, &none, &bad);
  const std::uint64_t n_total = values.size() + none;  // invalid samples excluded
  return tail_curve(values, L_grid, n_total, none, min_count);
}

}  // namespace gintail
