#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gintail/errors.hpp"
#include "gintail/walk_lab.hpp"

using namespace gintail;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("free limit: both walls far away") {
  const double t = 1.7;
  CHECK(trivariate_density(-40.0, 40.0, t) ==
        doctest::Approx(1.0 / std::sqrt(2.0 * kPi * t)).epsilon(1e-14));
}

TEST_CASE("degenerate and invalid geometry") {
  CHECK(trivariate_density(0.0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(trivariate_density(0.5, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(trivariate_density(-1.0, 1.0, 0.0), ValidationError);
}

TEST_CASE("symmetric wall growth is monotone") {
  double prev = 0.0;
  for (double b = 0.4; b <= 3.2; b += 0.4) {
    const double v = trivariate_density(-b, b, 1.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev < 1.0 / std::sqrt(2.0 * kPi));
}

TEST_CASE("truncation index choice does not move the value") {
  const double v_auto = trivariate_density(-1.0, 1.0, 1.0);
  const double v_big = trivariate_density(-1.0, 1.0, 1.0, 60);
  CHECK(v_auto == doctest::Approx(v_big).epsilon(1e-14));
}

TEST_CASE("path MC with crossing corrections reproduces the reflection series") {
  WalkConfig cfg;
  cfg.batch = 120000;
  cfg.seed = 8;
  struct Case {
    double a, b, t;
  };
  for (const Case& c : {Case{-1.0, 1.0, 1.0}, Case{-2.0, 1.0, 1.0}}) {
    const double exact = trivariate_density(c.a, c.b, c.t);
    const McEstimate mc = trivariate_mc(c.a, c.b, c.t, 2048, cfg);
    CHECK(std::fabs(mc.mean - exact) <= 3.0 * mc.std_error);
    CHECK(mc.std_error < 0.01 * std::fabs(exact) + 1e-4);
  }
}

TEST_CASE("downstream form: capped-range expectation at n = 100, L = 5") {
  // (1/n) E(min(L, sup - inf) delta_0(B_{2n})) for the rate-1/2 motion has the
  // closed continuum form 1/(2n) - (2L/sqrt(2 pi n^3)) sum_k e^{-2k^2L^2/n};
  // the discrete-walk estimate sits within the e2 discretization envelope.
  const std::int64_t n = 100;
  const double L = 5.0;
  double theta = 0.0;
  for (int k = 1; k < 60; ++k)
    theta += std::exp(-2.0 * k * k * L * L / static_cast<double>(n));
  const double nn = static_cast<double>(n);
  const double closed = 1.0 / (2.0 * nn) - 2.0 * L / std::sqrt(2.0 * kPi * nn * nn * nn) * theta;

  WalkConfig cfg;
  cfg.batch = 60000;
  cfg.seed = 21;
  cfg.increment_variance = 0.5;
  const McEstimate mc = bridge_expectation(n, BridgeFunctional::range_capped, L, cfg);
  const double p_mc = mc.mean / nn;
  const double envelope = 0.53 * std::pow(nn, -1.4) + 3.0 * mc.std_error / nn;
  CHECK(std::fabs(p_mc - closed) <= envelope);
}
