#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fdo/quadrature.hpp"
#include "support/oracles.hpp"

TEST_SUITE("quadrature") {

TEST_CASE("polynomials integrate exactly") {
  const double v = fdo::integrate([](double x) { return 3.0 * x * x; }, 0.0, 2.0);
  CHECK(v == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("matches Romberg oracle on oscillatory and peaked integrands") {
  const auto f1 = [](double x) { return std::sin(3.0 * x) * std::exp(-x); };
  CHECK(fdo::integrate(f1, 0.0, 5.0) ==
        doctest::Approx(oracle::romberg(f1, 0.0, 5.0)).epsilon(1e-9));

  const auto f2 = [](double x) { return std::exp(-50.0 * x * x); };
  CHECK(fdo::integrate(f2, -2.0, 2.0) ==
        doctest::Approx(std::sqrt(std::numbers::pi / 50.0)).epsilon(1e-9));
}

TEST_CASE("line integral captures the whole Gaussian mass") {
  const double v = fdo::integrate_line(
      [](double x) { return std::exp(-x * x); }, 0.0, 4.0);
  CHECK(v == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-11));
}

TEST_CASE("empty interval gives zero") {
  CHECK(fdo::integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
  CHECK(fdo::integrate([](double x) { return x; }, 2.0, 1.0) == 0.0);
}

TEST_CASE("square-root kink converges to tolerance") {
  const double v =
      fdo::integrate([](double x) { return std::sqrt(std::abs(x)); }, -1.0, 1.0);
  CHECK(v == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
}

}  // TEST_SUITE
