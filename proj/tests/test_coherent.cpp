#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fdo/coherent.hpp"
#include "fdo/potential.hpp"
#include "fdo/quadrature.hpp"
#include "support/oracles.hpp"

using fdo::GaussianParam;
using fdo::PotentialSpec;
using fdo::TestFunction;

TEST_SUITE("coherent") {

TEST_CASE("heat times multiply to the fixed uncertainty product") {
  for (double a : {0.3, 1.0, 7.5}) {
    const GaussianParam g(a);
    CHECK(g.t * g.s ==
          doctest::Approx(1.0 / (64.0 * std::numbers::pi * std::numbers::pi))
              .epsilon(1e-15));
  }
}

TEST_CASE("window evaluation and normalization") {
  CHECK(fdo::gaussian_eval(GaussianParam(std::numbers::pi), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fdo::gaussian_eval(GaussianParam(1.0), 0.0) ==
        doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-12));
  for (double a : {0.5, 1.0, 4.0}) {
    const GaussianParam g(a);
    const double mass = fdo::integrate_line(
        [&](double y) { return fdo::gaussian_sq(g, y); }, 0.0, 14.0 / std::sqrt(a));
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    const double hat_mass = fdo::integrate_line(
        [&](double xi) { return fdo::gaussian_hat_sq(g, xi); }, 0.0,
        14.0 * std::sqrt(a) / (2.0 * std::numbers::pi));
    CHECK(hat_mass == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("absolute moments: closed form against quadrature") {
  const GaussianParam g(1.0);
  CHECK(fdo::abs_moment(g, 2.0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(fdo::abs_moment(g, 1.0) ==
        doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(fdo::abs_moment(g, 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
  for (double gamma : {0.5, 1.0, 2.0, 3.7}) {
    for (double a : {0.5, 2.0}) {
      const GaussianParam ga(a);
      // y = t^2 removes the |y|^gamma kink at the origin for the oracle
      const double byquad =
          2.0 * oracle::romberg(
                    [&](double t) {
                      const double y = t * t;
                      return 2.0 * t * std::pow(y, gamma) * fdo::gaussian_sq(ga, y);
                    },
                    0.0, std::sqrt(40.0 / std::sqrt(a)), 1e-13);
      CHECK(fdo::abs_moment(ga, gamma) == doctest::Approx(byquad).epsilon(1e-10));
    }
  }
}

TEST_CASE("moment scaling is exactly a^{-gamma/2}") {
  for (double gamma : {0.5, 1.0, 3.0}) {
    const double ref = fdo::abs_moment(GaussianParam(1.0), gamma);
    for (double a : {0.25, 2.0, 9.0}) {
      const double scaled =
          fdo::abs_moment(GaussianParam(a), gamma) * std::pow(a, 0.5 * gamma);
      CHECK(scaled == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("kinetic multiplier: values, limit, monotonicity, residual") {
  CHECK(fdo::kinetic_multiplier(GaussianParam(fdo::kSixteenPiSquared)) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  const GaussianParam tiny(1e-8);
  CHECK(fdo::kinetic_multiplier(tiny) ==
        doctest::Approx(1.0 - 1e-8 / fdo::kSixteenPiSquared).epsilon(1e-12));
  double previous = 1.0;
  for (double a : {0.5, 1.0, 4.0, 20.0}) {
    const double m = fdo::kinetic_multiplier(GaussianParam(a));
    CHECK(m < previous);
    previous = m;
  }
  CHECK(fdo::kinetic_multiplier_residual(GaussianParam(1.0)) < 1e-8);
}

TEST_CASE("transform: overlaps, separation, Gaussian Fourier factor") {
  const GaussianParam g(1.0);
  const TestFunction psi = TestFunction::gaussian(1.0);
  const auto same = fdo::transform(psi, g, 0.0, 0.0);
  CHECK(same.real() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(same.imag()) < 1e-12);

  CHECK(std::abs(fdo::transform(psi, g, 0.0, 20.0)) < 1e-12);

  // int e^{-2 pi i k x} g_1(x)^2 dx = e^{-pi^2 k^2}
  const auto shifted = fdo::transform(psi, g, 1.0, 0.0);
  CHECK(std::abs(shifted) ==
        doctest::Approx(std::exp(-std::numbers::pi * std::numbers::pi))
            .epsilon(1e-6));

  // Cauchy-Schwarz keeps the transform inside the unit disk
  oracle::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const double k = rng.uniform(-3.0, 3.0);
    const double y = rng.uniform(-5.0, 5.0);
    CHECK(std::abs(fdo::transform(psi, g, k, y)) <= 1.0 + 1e-12);
  }

  CHECK_THROWS_AS(fdo::transform(psi, g, 0.0, 23.5), fdo::numeric_error);
}

TEST_CASE("marginal identities hold on the shared grid") {
  const PotentialSpec square(2.0, 0.0);
  const GaussianParam g(1.0);
  const auto r_g = fdo::marginal_residuals(TestFunction::gaussian(1.0), g, square);
  CHECK(r_g.r_k < 1e-8);
  CHECK(r_g.r_y < 1e-8);
  CHECK(r_g.r_w < 1e-8);

  const auto r_h = fdo::marginal_residuals(TestFunction::hermite(1), g, square);
  CHECK(r_h.r_k < 1e-8);
  CHECK(r_h.r_y < 1e-8);

  // W scaled to zero collapses the potential identity exactly
  const auto r_0 =
      fdo::marginal_residuals(TestFunction::gaussian(1.0), g, square, 0.0);
  CHECK(r_0.r_w == 0.0);
}

TEST_CASE("windowed transforms resolve the identity") {
  for (double a : {0.5, 4.0}) {
    CHECK(fdo::plancherel_total(TestFunction::gaussian(1.0), GaussianParam(a)) ==
          doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("grid convolution agrees with the smoothing quadrature") {
  const GaussianParam g(1.0);
  const TestFunction psi = TestFunction::gaussian(1.0);
  const double h = psi.spacing();
  const GaussianParam one(1.0);
  for (double y : {0.0, 0.7, 2.1}) {
    double conv = 0.0;
    for (int i = 0; i < psi.size(); ++i) {
      conv += std::norm(psi.samples()[i]) * fdo::gaussian_sq(g, y - psi.node(i));
    }
    conv *= h;
    const double smoothed = fdo::heat_smooth(
        [&](double x) {
          const double v = fdo::gaussian_eval(one, x);
          return v * v;
        },
        g.a, y);
    CHECK(conv == doctest::Approx(smoothed).epsilon(1e-8));
  }
}

TEST_CASE("custom samples must be normalized") {
  std::vector<std::complex<double>> bad(16, {1.0, 0.0});
  CHECK_THROWS_AS(TestFunction::custom(bad, -8.0, 1.0), std::invalid_argument);
}

TEST_CASE("marginal residuals require edge decay") {
  // a very wide test function is still visible at the grid boundary
  const TestFunction wide = TestFunction::gaussian(0.001);
  CHECK_THROWS_AS(fdo::marginal_residuals(wide, GaussianParam(1.0),
                                          PotentialSpec(2.0, 0.0)),
                  fdo::numeric_error);
}

}  // TEST_SUITE
