#include "fdo/phasespace.hpp"

#include <algorithm>
#include <cmath>

#include "fdo/quadrature.hpp"

namespace fdo {

PhaseSpaceQuery::PhaseSpaceQuery(double lambda_in, double c_in, PotentialSpec spec_in)
    : lambda(lambda_in), C(c_in), spec(spec_in) {
  if (!(lambda_in > 0.0) || !std::isfinite(lambda_in)) {
    throw std::invalid_argument("phase-space query needs lambda > 0");
  }
  if (!(c_in > 0.0) || !std::isfinite(c_in)) {
    throw std::invalid_argument("phase-space query needs C > 0");
  }
}

namespace {

const QuadratureOptions kOuter{1e-12, 1e-10, 60, 3};
const QuadratureOptions kInner{1e-13, 1e-11, 60, 3};

// Inner integral over the potential coordinate at effective energy vcap:
//   int_{W(0)}^{vcap} (vcap - v) / W'(W^{-1}(v)) dv
// evaluated in the y variable on [0, y0] (where W' may vanish) and in the v
// variable beyond W(y0).
double inner_reduced(const PotentialSpec& spec, double vcap) {
  const double w0 = spec.value_at_zero();
  if (!(vcap > w0)) return 0.0;
  constexpr double kSliverY = 1.0;
  const double sliver_cap = spec.value(kSliverY);
  if (vcap <= sliver_cap) {
    const double ymax = spec.inverse(vcap);
    return integrate([&](double y) { return vcap - spec.value(y); }, 0.0, ymax,
                     kInner);
  }
  const double sliver = integrate(
      [&](double y) { return vcap - spec.value(y); }, 0.0, kSliverY, kInner);
  const double main = integrate(
      [&](double v) { return (vcap - v) / spec.derivative(spec.inverse(v)); },
      sliver_cap, vcap, kInner);
  return sliver + main;
}

// Inner integral in the plain y form (no substitution): used by the direct
// 2-d route and the cosh integral.
double inner_direct(const PotentialSpec& spec, double vcap) {
  if (!(vcap > spec.value_at_zero())) return 0.0;
  const double ymax = spec.inverse(vcap);
  return integrate([&](double y) { return vcap - spec.value(y); }, 0.0, ymax,
                   kInner);
}

}  // namespace

double quadrant_integral(const PhaseSpaceQuery& q) {
  const double w0 = q.spec.value_at_zero();
  if (!(q.C < q.lambda - w0)) return 0.0;
  // Outer variable u = C e^k integrated in w = log u, i.e. du/u = dw.
  const double value = integrate(
      [&](double w) { return inner_reduced(q.spec, q.lambda - std::exp(w)); },
      std::log(q.C), std::log(q.lambda - w0), kOuter);
  return 4.0 * value;
}

double quadrant_integral_2d(const PhaseSpaceQuery& q) {
  const double w0 = q.spec.value_at_zero();
  if (!(q.C < q.lambda - w0)) return 0.0;
  const double kmax = std::log((q.lambda - w0) / q.C);
  const double value = integrate(
      [&](double k) { return inner_direct(q.spec, q.lambda - q.C * std::exp(k)); },
      0.0, kmax, kOuter);
  return 4.0 * value;
}

double cosh_integral(const PhaseSpaceQuery& q) {
  const double w0 = q.spec.value_at_zero();
  if (!(q.C < q.lambda - w0)) return 0.0;
  const double kmax = std::acosh((q.lambda - w0) / q.C);
  const double value = integrate(
      [&](double k) { return inner_direct(q.spec, q.lambda - q.C * std::cosh(k)); },
      0.0, kmax, kOuter);
  return 4.0 * value;
}

double kinetic_positive_part(double lambda, double C) {
  if (!(C > 0.0)) throw std::invalid_argument("kinetic_positive_part needs C > 0");
  if (!(lambda > C)) return 0.0;
  const double kmax = std::acosh(lambda / C);
  return 2.0 * integrate([&](double k) { return lambda - C * std::cosh(k); }, 0.0,
                         kmax, kOuter);
}

double offset_integral(const PhaseSpaceQuery& q) {
  const double w0 = q.spec.value_at_zero();
  if (!(q.C < q.lambda - w0)) return 0.0;
  return integrate([&](double u) { return q.spec.inverse(q.lambda - u); }, q.C,
                   q.lambda - w0, kOuter);
}

LeadingTerm leading_term_for(const PotentialSpec& spec) {
  if (spec.beta() == 0.0) {
    return LeadingTerm{4.0 * spec.p() / (spec.p() + 1.0), 1.0 + 1.0 / spec.p(), 1.0};
  }
  return LeadingTerm{4.0, 1.0, 1.0 + 1.0 / spec.beta()};
}

double evaluate(const LeadingTerm& term, double lambda) {
  return term.coefficient * std::pow(lambda, term.lambda_exponent) *
         std::pow(std::log(lambda), term.log_exponent);
}

double leading_term(const PotentialSpec& spec, double lambda) {
  if (!(lambda >= std::exp(1.0))) {
    throw std::domain_error("leading_term needs lambda >= e");
  }
  return evaluate(leading_term_for(spec), lambda);
}

namespace {

// int_c^1 u (1-u)^{1/p-1} log u du.  The u -> 1 endpoint is regularized by
// 1 - u = t^k with k = ceil(4p), which makes the transformed integrand C^3
// at t = 0; the surviving u log u kink at u = 0 is quadrature-friendly.
double beta_log_integral(double p, double c) {
  const double alpha = 1.0 / p - 1.0;
  double acc = 0.0;
  if (c < 0.5) {
    acc += integrate(
        [&](double u) {
          return u <= 0.0 ? 0.0 : u * std::pow(1.0 - u, alpha) * std::log(u);
        },
        c, 0.5, kOuter);
  }
  const double hi = std::max(c, 0.5);
  const double k = std::max(1.0, std::ceil(4.0 * p));
  const double tmax = std::pow(1.0 - hi, 1.0 / k);
  acc += integrate(
      [&](double t) {
        const double tk = std::pow(t, k);
        const double u = 1.0 - tk;
        if (u <= 0.0 || u >= 1.0) return 0.0;
        return k * std::pow(t, k - 1.0) * u * std::pow(tk, alpha) * std::log(u);
      },
      0.0, tmax, kOuter);
  return acc;
}

}  // namespace

double tail_integral(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("tail_integral needs p > 0");
  return beta_log_integral(p, 0.0);
}

double ibp_residual_power(double lambda, double C, double p) {
  if (!(C > 0.0 && C < lambda)) {
    throw std::invalid_argument("ibp_residual_power needs 0 < C < lambda");
  }
  if (!(p > 0.0)) throw std::invalid_argument("ibp_residual_power needs p > 0");
  const double c = C / lambda;
  const auto raw = [&](double u) {
    return std::pow(1.0 - u, 1.0 / p) * (p + u) / u;
  };
  double lhs = 0.0;
  if (c < 0.5) lhs += integrate(raw, c, 0.5, kOuter);
  // 1 - u = t^4 smooths the (1-u)^{1/p} endpoint for every p > 0.
  const double hi = std::max(c, 0.5);
  const double tmax = std::pow(1.0 - hi, 0.25);
  lhs += integrate(
      [&](double t) {
        const double t4 = t * t * t * t;
        return 4.0 * t * t * t * std::pow(t4, 1.0 / p) * (p + 1.0 - t4) /
               (1.0 - t4);
      },
      0.0, tmax, kOuter);
  const double rhs = std::log(lambda / C) * std::pow(1.0 - c, 1.0 / p) * (p + c) +
                     (p + 1.0) / p * beta_log_integral(p, c);
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

double ibp_residual_exp(double lambda, double C, double L_cut, double r) {
  if (!(L_cut > 1.0)) throw std::invalid_argument("ibp_residual_exp needs L_cut > 1");
  if (!(C > 0.0 && C < lambda - L_cut)) {
    throw std::invalid_argument("ibp_residual_exp needs 0 < C < lambda - L_cut");
  }
  if (!(r > 0.0)) throw std::invalid_argument("ibp_residual_exp needs r > 0");
  const double wlo = std::log(C);
  const double whi = std::log(lambda - L_cut);
  const auto logpow_int = [&](double vcap, double expo) {
    return integrate([&](double v) { return std::pow(std::log(v), expo); }, L_cut,
                     vcap, kInner);
  };
  const double lhs = integrate(
      [&](double w) { return logpow_int(lambda - std::exp(w), r); }, wlo, whi,
      kOuter);
  const double boundary = integrate(
      [&](double w) {
        const double vcap = lambda - std::exp(w);
        return vcap * std::pow(std::log(vcap), r) -
               L_cut * std::pow(std::log(L_cut), r);
      },
      wlo, whi, kOuter);
  const double lower_order = integrate(
      [&](double w) { return logpow_int(lambda - std::exp(w), r - 1.0); }, wlo, whi,
      kOuter);
  return std::abs(lhs - (boundary - r * lower_order)) / (1.0 + std::abs(lhs));
}

}  // namespace fdo
