#include <cmath>
#include <vector>

#include "doctest.h"
#include "fdo/potential.hpp"
#include "support/oracles.hpp"

using fdo::PotentialSpec;

TEST_SUITE("potential") {

TEST_CASE("construction rejects the degenerate family") {
  CHECK_THROWS_AS(PotentialSpec(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PotentialSpec(-1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PotentialSpec(1.0, 2.5), std::invalid_argument);
}

TEST_CASE("value: powers, exponentials, evenness") {
  CHECK(PotentialSpec(2.0, 0.0).value(-3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(PotentialSpec(0.0, 1.0).value(2.0) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-14));
  CHECK(PotentialSpec(1.0, 1.0).value(1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  const PotentialSpec w(1.5, 0.7);
  for (double x : {0.3, 1.7, 4.0}) {
    CHECK(w.value(x) == doctest::Approx(w.value(-x)).epsilon(1e-15));
  }
  CHECK(PotentialSpec(2.0, 0.0).value(0.0) == 0.0);
  CHECK(PotentialSpec(0.0, 1.0).value(0.0) == 1.0);
}

TEST_CASE("value overflow carries the argument") {
  try {
    PotentialSpec(0.0, 1.0).value(800.0);
    FAIL("expected range_overflow_error");
  } catch (const fdo::range_overflow_error& e) {
    CHECK(e.argument() == 800.0);
  }
}

TEST_CASE("derivative matches closed forms and finite differences") {
  CHECK(PotentialSpec(2.0, 0.0).derivative(3.0) ==
        doctest::Approx(6.0).epsilon(1e-13));
  CHECK(PotentialSpec(0.0, 1.0).derivative(1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  // (p=1, beta=2) at x=1: oracle by symmetric differences of value().
  const PotentialSpec w(1.0, 2.0);
  const double fd =
      oracle::derivative([&](double x) { return w.value(x); }, 1.0, 1e-5);
  CHECK(w.derivative(1.0) == doctest::Approx(3.0 * std::exp(1.0)).epsilon(1e-9));
  CHECK(w.derivative(1.0) == doctest::Approx(fd).epsilon(1e-8));
  CHECK_THROWS_AS(w.derivative(0.0), std::domain_error);
  CHECK_THROWS_AS(w.derivative(-1.0), std::domain_error);
}

TEST_CASE("inverse: closed forms and round trips") {
  CHECK(PotentialSpec(2.0, 0.0).inverse(4.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(PotentialSpec(0.0, 1.0).inverse(std::exp(3.0)) ==
        doctest::Approx(3.0).epsilon(1e-13));
  CHECK(PotentialSpec(1.0, 1.0).inverse(std::exp(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(PotentialSpec(2.0, 0.0).inverse(-1.0), std::domain_error);
  CHECK_THROWS_AS(PotentialSpec(0.0, 1.0).inverse(0.5), std::domain_error);

  for (const PotentialSpec w :
       {PotentialSpec(1.0, 1.0), PotentialSpec(2.0, 0.5), PotentialSpec(0.5, 2.0)}) {
    double previous = 0.0;
    for (double v : {0.01, 0.5, 2.0, 50.0, 1e4, 1e8}) {
      if (v < w.value_at_zero()) continue;
      const double y = w.inverse(v);
      CHECK(w.value(y) == doctest::Approx(v).epsilon(1e-10));
      CHECK(y >= previous);  // nondecreasing in v
      previous = y;
    }
  }
}

TEST_CASE("inverse_asymptotic tracks the true inverse from below") {
  CHECK(PotentialSpec(0.0, 1.0).inverse_asymptotic(std::exp(10.0)) ==
        doctest::Approx(10.0).epsilon(1e-13));
  CHECK(PotentialSpec(2.0, 0.0).inverse_asymptotic(16.0) ==
        doctest::Approx(4.0).epsilon(1e-13));
  const PotentialSpec w(1.0, 1.0);
  const double ratio = w.inverse(1e6) / w.inverse_asymptotic(1e6);
  CHECK(ratio >= 0.80);
  CHECK(ratio <= 1.0);
  CHECK_THROWS_AS(w.inverse_asymptotic(0.5), std::domain_error);
}

TEST_CASE("binomial majorant: exponent sets and pointwise domination") {
  const auto m1 = fdo::binomial_majorant(PotentialSpec(1.0, 0.0));
  REQUIRE(m1.exponents.size() == 2);
  CHECK(m1.exponents[0] == doctest::Approx(0.5));
  CHECK(m1.exponents[1] == doctest::Approx(1.0));
  CHECK(m1.min_exponent == doctest::Approx(0.5));
  {  // spot check at (x, y) = (3, 1)
    double sum = 0.0;
    for (double g : m1.exponents) sum += 1.0;  // |y| = 1
    CHECK(std::pow(2.0, 1.0) <= 3.0 + m1.constant * (1.0 + 3.0) * sum);
  }

  const auto m2 = fdo::binomial_majorant(PotentialSpec(2.0, 0.0));
  REQUIRE(m2.exponents.size() == 2);
  CHECK(m2.exponents[0] == doctest::Approx(1.0));
  CHECK(m2.exponents[1] == doctest::Approx(2.0));
  // |x-y|^2 <= x^2 + 2 (1+x^2)(|y| + y^2) on a fine sample
  for (double x = -50.0; x <= 50.0; x += 2.5) {
    for (double y = -50.0; y <= 50.0; y += 2.5) {
      const double lhs = (x - y) * (x - y);
      const double rhs =
          x * x + m2.constant * (1.0 + x * x) * (std::abs(y) + y * y);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }

  const auto m4 = fdo::binomial_majorant(PotentialSpec(4.0, 0.0));
  double sum = 0.0;
  for (double g : m4.exponents) sum += std::pow(1.0, g);
  CHECK(1.0 <= 16.0 + m4.constant * 17.0 * sum);  // (x,y) = (2,1)

  CHECK_THROWS_AS(fdo::binomial_majorant(PotentialSpec(1.0, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("majorant handles fractional powers") {
  for (double p : {0.5, 1.7, 3.0, 5.5}) {
    const auto m = fdo::binomial_majorant(PotentialSpec(p, 0.0));
    CHECK(m.min_exponent > 0.0);
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-30.0, 30.0);
      const double y = rng.uniform(-30.0, 30.0);
      double sum = 0.0;
      for (double g : m.exponents) sum += std::pow(std::abs(y), g);
      const double lhs = std::pow(std::abs(x - y), p);
      const double rhs = std::pow(std::abs(x), p) +
                         m.constant * (1.0 + std::pow(std::abs(x), p)) * sum;
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("heat smoothing: cosh hook, variance shift, delta limit") {
  // (cosh * g_a^2)(x) = e^{1/(4a)} cosh(x)
  const double smoothed =
      fdo::heat_smooth([](double z) { return std::cosh(z); }, 1.0, 0.0);
  CHECK(smoothed == doctest::Approx(std::exp(0.25)).epsilon(1e-10));
  const double at2 =
      fdo::heat_smooth([](double z) { return std::cosh(z); }, 2.0, 1.5);
  CHECK(at2 == doctest::Approx(std::exp(0.125) * std::cosh(1.5)).epsilon(1e-10));

  // (x^2 * g_a^2) adds the variance 1/(2a)
  const PotentialSpec square(2.0, 0.0);
  CHECK(fdo::heat_smooth(square, 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(fdo::heat_smooth(square, 1.0, 3.0) ==
        doctest::Approx(9.5).epsilon(1e-10));

  // a -> infinity recovers W pointwise
  for (const PotentialSpec w : {PotentialSpec(2.0, 0.0), PotentialSpec(0.0, 1.0),
                                PotentialSpec(1.0, 1.0)}) {
    const double v = fdo::heat_smooth(w, 1e4, 1.0);
    CHECK(std::abs(v - w.value(1.0)) < 1e-3 * (1.0 + w.value(1.0)));
  }
}

TEST_CASE("heat smoothing of e^{x^2} needs a > 1") {
  const PotentialSpec w(0.0, 2.0);
  CHECK_THROWS_AS(fdo::heat_smooth(w, 1.0, 0.0), std::domain_error);
  // Exact value for a > 1: sqrt(a/(a-1)) e^{a x^2/(a-1)}
  const double a = 3.0;
  const double got = fdo::heat_smooth(w, a, 1.0);
  CHECK(got == doctest::Approx(std::sqrt(a / (a - 1.0)) *
                               std::exp(a / (a - 1.0))).epsilon(1e-9));
}

TEST_CASE("smoothing is even in x") {
  for (const PotentialSpec w : {PotentialSpec(2.0, 0.0), PotentialSpec(1.0, 1.0)}) {
    for (double x : {0.4, 1.9, 6.0}) {
      CHECK(fdo::heat_smooth(w, 1.5, x) ==
            doctest::Approx(fdo::heat_smooth(w, 1.5, -x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("smoothing dominates W for convex members") {
  for (const PotentialSpec w : {PotentialSpec(2.0, 0.0), PotentialSpec(1.0, 0.0),
                                PotentialSpec(0.0, 1.0), PotentialSpec(1.0, 1.0)}) {
    for (double x : {0.0, 0.7, 2.0, 5.0}) {
      CHECK(fdo::heat_smooth(w, 2.0, x) >= w.value(x) * (1.0 - 1e-10));
    }
  }
}

TEST_CASE("smoothing semigroup: consecutive times add") {
  const PotentialSpec w(2.0, 0.0);
  const double a = 2.0;
  for (double x : {0.0, 1.3}) {
    const double twice = fdo::heat_smooth(
        [&](double z) { return fdo::heat_smooth(w, a, z); }, a, x);
    CHECK(twice == doctest::Approx(fdo::heat_smooth(w, 0.5 * a, x)).epsilon(1e-8));
  }
}

TEST_CASE("affine certificate dominates the exact smoothing error") {
  const PotentialSpec square(2.0, 0.0);
  const auto cert = fdo::affine_certificate(square, 1.0);
  CHECK(cert.sigma == cert.tau);
  // exact error of smoothing x^2 is the constant 1/(2a) = 0.5
  for (double x = -50.0; x <= 50.0; x += 0.5) {
    CHECK(cert.sigma * x * x + cert.tau >= 0.5 * (1.0 - 1e-12));
  }
}

TEST_CASE("affine certificate scales like a^{-gamma0/2}") {
  const PotentialSpec w(1.0, 0.0);
  const double s1 = fdo::affine_certificate(w, 1.0).sigma;
  const double s100 = fdo::affine_certificate(w, 100.0).sigma;
  CHECK(s100 / s1 <= std::pow(0.01, 0.25) * (1.0 + 1e-6));

  const PotentialSpec square(2.0, 0.0);
  const auto tiny = fdo::affine_certificate(square, 1e6);
  CHECK(tiny.sigma < 1e-2);
  CHECK(tiny.tau < 1e-2);
}

TEST_CASE("moment decay: quadrupling a gains at least 2^{-gamma0}") {
  for (double p : {1.0, 2.0, 4.0}) {
    const PotentialSpec w(p, 0.0);
    const double g0 = fdo::binomial_majorant(w).min_exponent;
    const double s_a = fdo::affine_certificate(w, 1.0).sigma;
    const double s_4a = fdo::affine_certificate(w, 4.0).sigma;
    CHECK(s_4a <= s_a * std::pow(2.0, -g0) * (1.0 + 1e-9));
  }
}

TEST_CASE("dilation certificate: scale arithmetic and validity") {
  // beta=2, eps=0.5: K = 2^0/0.5 = 2, so a = 2 <= 1 + K must be rejected
  CHECK_THROWS_AS(fdo::dilation_certificate(PotentialSpec(0.0, 2.0), 2.0, 0.5),
                  fdo::certificate_error);

  const auto cert = fdo::dilation_certificate(PotentialSpec(0.0, 1.0), 25.0, 0.25);
  CHECK(cert.K == doctest::Approx(2.0));
  CHECK(cert.mu == doctest::Approx(1.25));
  CHECK(cert.valid);
  CHECK(cert.residual_main < 1.0);
  CHECK(cert.residual_tail == 0.0);  // p = 0 has no power majorant

  // construction already sample-verified the inequality; spot check anyway
  const PotentialSpec w(0.0, 1.0);
  for (double x : {0.0, 3.0, 10.0}) {
    CHECK(fdo::heat_smooth(w, 25.0, x) <=
          2.0 * (w.value(cert.mu * x) + 1.0) * (1.0 + 1e-9));
  }
}

TEST_CASE("dilation factor shrinks to 1 with epsilon") {
  double previous = 2.0;
  for (double eps : {1.0, 0.5, 0.25, 0.1, 0.01}) {
    const double mu = std::pow(1.0 + eps, 1.0 / 1.5);
    CHECK(mu < previous);
    CHECK(mu > 1.0);
    previous = mu;
  }
  CHECK(std::pow(1.0 + 0.0, 1.0 / 1.5) == 1.0);
}

TEST_CASE("young split certificate constant covers the cross term") {
  // |x-y|^beta <= (1+eps)|x|^beta + (1+K)|y|^beta with K = 2^{beta-2}/eps
  oracle::Rng rng(5);
  for (double beta : {0.5, 1.0, 1.5, 2.0}) {
    for (double eps : {0.1, 0.5, 1.0}) {
      const double K = std::pow(2.0, beta - 2.0) / eps;
      for (int i = 0; i < 300; ++i) {
        const double x = rng.uniform(-20.0, 20.0);
        const double y = rng.uniform(-20.0, 20.0);
        const double lhs = std::pow(std::abs(x - y), beta);
        const double rhs = (1.0 + eps) * std::pow(std::abs(x), beta) +
                           (1.0 + K) * std::pow(std::abs(y), beta);
        CHECK(lhs <= rhs * (1.0 + 1e-12));
      }
    }
  }
}

}  // TEST_SUITE
