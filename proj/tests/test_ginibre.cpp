#include <cmath>

#include "doctest.h"
#include "gintail/errors.hpp"
#include "gintail/ginibre_lab.hpp"
#include "gintail/stats.hpp"

using namespace gintail;

TEST_CASE("parity invariant holds on every sample") {
  GinibreConfig cfg;
  cfg.n = 9;
  cfg.count = 400;
  cfg.seed = 2;
  for (const auto& s : sample_ginibre(cfg)) {
    REQUIRE(s.valid);
    CHECK(s.n_real % 2 == 1);  // n odd -> odd count
    CHECK(s.n_real >= 1);
    CHECK(std::isfinite(s.lambda_max_shifted));
  }
  cfg.n = 8;
  for (const auto& s : sample_ginibre(cfg)) {
    CHECK(s.n_real % 2 == 0);
    if (s.n_real > 0) CHECK(std::isfinite(s.lambda_max_shifted));
  }
}

TEST_CASE("N = 2: real count is 0 or 2, with the known probability") {
  GinibreConfig cfg;
  cfg.n = 2;
  cfg.count = 40000;
  cfg.seed = 77;
  std::uint64_t both_real = 0;
  for (const auto& s : sample_ginibre(cfg)) {
    CHECK((s.n_real == 0 || s.n_real == 2));
    if (s.n_real == 2) ++both_real;
  }
  // P(both real) = 1/sqrt(2) for the 2x2 iid Gaussian matrix
  const double frac = static_cast<double>(both_real) / static_cast<double>(cfg.count);
  CHECK(frac == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.02));
}

TEST_CASE("expected number of real eigenvalues tracks sqrt(2N/pi)") {
  GinibreConfig cfg;
  cfg.n = 100;
  cfg.count = 1500;
  cfg.seed = 5;
  double mean = 0.0;
  for (const auto& s : sample_ginibre(cfg)) mean += s.n_real;
  mean /= static_cast<double>(cfg.count);
  // E n_real = sqrt(2N/pi) + 1/2 + o(1); the band below covers the MC noise
  // of 1500 replicas without hugging the asymptotic correction.
  const double scale = std::sqrt(2.0 * 100.0 / 3.14159265);
  CHECK(mean > scale - 0.3);
  CHECK(mean < scale + 1.0);
}

TEST_CASE("hessenberg_direct sampling agrees with dense_schur in law") {
  GinibreConfig dense;
  dense.n = 48;
  dense.count = 2500;
  dense.seed = 9;
  dense.method = GinibreMethod::dense_schur;
  GinibreConfig hess = dense;
  hess.seed = 10;
  hess.method = GinibreMethod::hessenberg_direct;
  const auto a = lambda_max_values(sample_ginibre(dense));
  const auto b = lambda_max_values(sample_ginibre(hess));
  const KsResult ks = two_sample_ks(a, b);
  CHECK(ks.p_value > 0.001);
  // real-count means agree too
  double ma = 0, mb = 0;
  for (const auto& s : sample_ginibre(dense)) ma += s.n_real;
  for (const auto& s : sample_ginibre(hess)) mb += s.n_real;
  CHECK(ma / dense.count == doctest::Approx(mb / hess.count).epsilon(0.05));
}

TEST_CASE("reproducibility: same config, different workers") {
  GinibreConfig a;
  a.n = 24;
  a.count = 300;
  a.seed = 123;
  a.workers = 1;
  GinibreConfig b = a;
  b.workers = 3;
  const auto sa = sample_ginibre(a);
  const auto sb = sample_ginibre(b);
  REQUIRE(sa.size() == sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    CHECK(sa[i].n_real == sb[i].n_real);
    if (sa[i].n_real > 0) CHECK(sa[i].lambda_max_shifted == sb[i].lambda_max_shifted);
  }
}

TEST_CASE("median of the shifted maximum drifts toward a stable limit") {
  // reported trend: the shift by sqrt(N) keeps the median O(1)
  double medians[2];
  int idx = 0;
  for (int n : {64, 256}) {
    GinibreConfig cfg;
    cfg.n = n;
    cfg.count = 600;
    cfg.seed = 31;
    medians[idx++] = median(lambda_max_values(sample_ginibre(cfg)));
  }
  MESSAGE("median(lambda_max - sqrt(N)) at N=64: ", medians[0], ", N=256: ", medians[1]);
  CHECK(std::fabs(medians[0]) < 1.5);
  CHECK(std::fabs(medians[1]) < 1.5);
}

TEST_CASE("tail curve over the shifted maxima") {
  GinibreConfig cfg;
  cfg.n = 64;
  cfg.count = 3000;
  cfg.seed = 4;
  const auto samples = sample_ginibre(cfg);
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const TailCurve c = ginibre_tail_curve(samples, grid);
  CHECK(std::exp(c.log_prob[0]) > 0.0);
  CHECK(std::exp(c.log_prob[0]) < 1.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::isfinite(c.log_prob[i]) && std::isfinite(c.log_prob[i - 1]))
      CHECK(c.log_prob[i] <= c.log_prob[i - 1]);
  }
}

TEST_CASE("config validation") {
  GinibreConfig bad;
  bad.n = 1;
  CHECK_THROWS_AS(sample_ginibre(bad), ValidationError);
  GinibreConfig none;
  none.count = 0;
  CHECK_THROWS_AS(sample_ginibre(none), ValidationError);
}
