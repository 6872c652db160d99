#include "fdo/potential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fdo/coherent.hpp"
#include "fdo/quadrature.hpp"

namespace fdo {

namespace {

constexpr double kLogMax = 709.0;  // log of largest finite double, minus slack

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// log of W restricted to radius r > 0.
double log_value_radius(const PotentialSpec& spec, double r) {
  double lw = spec.p() > 0.0 ? spec.p() * std::log(r) : 0.0;
  if (spec.beta() > 0.0) lw += std::pow(r, spec.beta());
  return lw;
}

}  // namespace

PotentialSpec::PotentialSpec(double p, double beta) : p_(p), beta_(beta) {
  if (!(p >= 0.0)) throw std::invalid_argument("potential: p must be >= 0");
  if (!(beta >= 0.0 && beta <= 2.0)) {
    throw std::invalid_argument("potential: beta must lie in [0, 2]");
  }
  if (p == 0.0 && beta == 0.0) {
    throw std::invalid_argument("potential: p and beta cannot both be zero");
  }
}

double PotentialSpec::value_at_zero() const { return p_ > 0.0 ? 0.0 : 1.0; }

double PotentialSpec::value(double x) const {
  const double r = std::abs(x);
  if (r == 0.0) return value_at_zero();
  if (log_value_radius(*this, r) > kLogMax) {
    throw range_overflow_error("potential value overflows", x);
  }
  const double power = p_ > 0.0 ? std::pow(r, p_) : 1.0;
  return beta_ > 0.0 ? power * std::exp(std::pow(r, beta_)) : power;
}

double PotentialSpec::derivative(double x) const {
  if (!(x > 0.0)) {
    throw std::domain_error("potential derivative needs x > 0");
  }
  const double poly = p_ * std::pow(x, p_ - 1.0) +
                      (beta_ > 0.0 ? beta_ * std::pow(x, p_ + beta_ - 1.0) : 0.0);
  return beta_ > 0.0 ? poly * std::exp(std::pow(x, beta_)) : poly;
}

double PotentialSpec::inverse(double v) const {
  const double w0 = value_at_zero();
  if (v < w0) throw std::domain_error("potential inverse needs v >= W(0)");
  if (v == w0) return 0.0;
  if (beta_ == 0.0) return std::pow(v, 1.0 / p_);
  if (p_ == 0.0) return std::pow(std::log(v), 1.0 / beta_);

  // Mixed case.  For v >= W(1) the root lies below both coordinate brackets
  // y^p = v and e^{y^beta} = v; below W(1) it lies in (0, 1).
  double hi = 1.0;
  if (v >= value(1.0)) {
    hi = std::min(std::pow(v, 1.0 / p_), std::pow(std::log(v), 1.0 / beta_));
    while (value(hi) < v) hi *= 1.0 + 1e-12;
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (value(mid) < v ? lo : hi) = mid;
  }
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {  // Newton polish, kept inside the bracket
    const double step = (value(y) - v) / derivative(y);
    const double next = y - step;
    if (!(next > lo && next < hi)) break;
    y = next;
  }
  return y;
}

double PotentialSpec::inverse_asymptotic(double v) const {
  if (!(v > std::max(value_at_zero(), 1.0))) {
    throw std::domain_error("inverse_asymptotic needs v > max(W(0), 1)");
  }
  return beta_ > 0.0 ? std::pow(std::log(v), 1.0 / beta_)
                     : std::pow(v, 1.0 / p_);
}

namespace {

void verify_majorant_sample(const PotentialSpec& spec, const MajorantData& m) {
  const double p = spec.p();
  for (int i = 0; i < 100; ++i) {
    const double x = -50.0 + i * (100.0 / 99.0);
    const double xp = std::pow(std::abs(x), p);
    for (int j = 0; j < 100; ++j) {
      const double y = -50.0 + j * (100.0 / 99.0);
      double sum = 0.0;
      for (double g : m.exponents) sum += std::pow(std::abs(y), g);
      const double lhs = std::pow(std::abs(x - y), p);
      const double rhs = xp + m.constant * (1.0 + xp) * sum;
      if (lhs > rhs * (1.0 + 1e-12)) {
        throw numeric_error("binomial majorant violated on sample grid");
      }
    }
  }
}

}  // namespace

MajorantData binomial_majorant(const PotentialSpec& spec) {
  if (spec.beta() != 0.0) {
    throw std::invalid_argument("binomial_majorant applies to beta = 0 only");
  }
  const double p = spec.p();
  MajorantData out;

  if (p < 2.0) {
    // |x-y|^p <= |x|^p + 2^{p/2} |x|^{p/2} |y|^{p/2} + |y|^p.
    out.constant = std::pow(2.0, 0.5 * p);
    out.exponents = {0.5 * p, p};
  } else {
    // Expand (|x|^2 + 2|x||y| + |y|^2)^{q+r} with q = floor(p/2) and
    // subadditivity of t -> t^r for the fractional part r.
    const int q = static_cast<int>(std::floor(0.5 * p));
    const double r = 0.5 * p - q;
    struct RFactor {
      double x_exp, y_exp, coeff;
    };
    std::vector<RFactor> rfactors;
    if (r > 0.0) {
      rfactors = {{2.0 * r, 0.0, 1.0},
                  {r, r, std::pow(2.0, r)},
                  {0.0, 2.0 * r, 1.0}};
    } else {
      rfactors = {{0.0, 0.0, 1.0}};
    }
    std::map<double, double> by_y_exponent;
    for (int i = 0; i <= q; ++i) {
      for (int j = 0; j + i <= q; ++j) {
        const int k = q - i - j;
        const double base =
            factorial(q) / (factorial(i) * factorial(j) * factorial(k)) *
            std::pow(2.0, j);
        for (const auto& rf : rfactors) {
          const double y_exp = j + 2.0 * k + rf.y_exp;
          if (y_exp == 0.0) continue;  // the leading |x|^p term
          by_y_exponent[y_exp] += base * rf.coeff;
        }
      }
    }
    out.constant = 0.0;
    for (const auto& [exponent, coeff] : by_y_exponent) {
      out.exponents.push_back(exponent);
      out.constant = std::max(out.constant, coeff);
    }
  }
  out.min_exponent = out.exponents.front();
  verify_majorant_sample(spec, out);
  return out;
}

namespace {

// Integrand of (W * g_a^2)(x) in the z = x - y variable, evaluated through
// logs so that Gaussian-crushed tails underflow to zero instead of tripping
// the overflow guard in value().
double smooth_integrand(const PotentialSpec& spec, double a, double x, double z) {
  const double r = std::abs(z);
  double lf = 0.5 * std::log(a / kPi) - a * (x - z) * (x - z);
  if (r == 0.0) {
    if (spec.p() > 0.0) return 0.0;
  } else {
    lf += log_value_radius(spec, r);
  }
  return lf < -745.0 ? 0.0 : std::exp(lf);
}

// Window wide enough to contain the integrand's maximum; for beta = 2 the
// Gaussian quotient pushes the bump out to distance |x|/(a-1).
double smooth_window(const PotentialSpec& spec, double a, double x) {
  double w = 12.0 / std::sqrt(a);
  const double beta = spec.beta();
  if (beta == 2.0) {
    w = std::max(w, std::abs(x) / (a - 1.0) + 12.0 / std::sqrt(a - 1.0));
  } else if (beta > 1.0) {
    w = std::max(w, 2.0 * w + 2.0 * beta * std::pow(std::abs(x) + w + 1.0, beta - 1.0) / a);
  } else if (beta > 0.0) {
    w += 1.0 / a;
  }
  return w;
}

int forced_depth(double window, double finest) {
  const int d = static_cast<int>(std::ceil(std::log2(8.0 * window / finest)));
  return std::clamp(d, 4, 14);
}

}  // namespace

double heat_smooth(const PotentialSpec& spec, double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("heat_smooth needs a > 0");
  if (spec.beta() == 2.0 && a <= 1.0) {
    throw std::domain_error("heat_smooth: smoothing of e^{x^2} needs a > 1");
  }
  const double w = smooth_window(spec, a, x);
  const double finest =
      spec.beta() == 2.0 ? 1.0 / std::sqrt(a - 1.0) : 1.0 / std::sqrt(a);
  QuadratureOptions opt;
  opt.min_depth = forced_depth(w, finest);
  const double out = integrate_line(
      [&](double z) { return smooth_integrand(spec, a, x, z); }, x, w, opt);
  if (!std::isfinite(out)) {
    throw range_overflow_error("smoothed potential overflows", x);
  }
  return out;
}

double heat_smooth(const std::function<double(double)>& w, double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("heat_smooth needs a > 0");
  const double half = 12.0 / std::sqrt(a) + 2.0 + 2.0 / a;
  const double norm = std::sqrt(a / kPi);
  QuadratureOptions opt;
  opt.min_depth = forced_depth(half, 1.0 / std::sqrt(a));
  return integrate_line(
      [&](double z) {
        const double d = x - z;
        return w(z) * norm * std::exp(-a * d * d);
      },
      x, half, opt);
}

AffineCertificate affine_certificate(const PotentialSpec& spec, double a) {
  if (spec.beta() != 0.0) {
    throw std::invalid_argument("affine_certificate applies to beta = 0 only");
  }
  if (!(a > 0.0)) throw std::invalid_argument("affine_certificate needs a > 0");
  const MajorantData m = binomial_majorant(spec);
  const GaussianParam g(a);
  double moments = 0.0;
  for (double gamma : m.exponents) moments += abs_moment(g, gamma);
  const double sigma = m.constant * moments;
  AffineCertificate cert{sigma, sigma, a};

  // Pointwise re-verification of the certified inequality through the
  // quadrature path; failure here means the majorant itself is wrong.
  for (int i = 0; i < 1000; ++i) {
    const double x = -50.0 + i * (100.0 / 999.0);
    const double lhs = heat_smooth(spec, a, x);
    const double rhs = (1.0 + cert.sigma) * spec.value(x) + cert.tau;
    if (lhs > rhs + 1e-8 * (1.0 + rhs)) {
      throw numeric_error("affine certificate violated on sample grid");
    }
  }
  return cert;
}

DilationCertificate dilation_certificate(const PotentialSpec& spec, double a,
                                         double epsilon) {
  if (!(spec.beta() > 0.0)) {
    throw std::invalid_argument("dilation_certificate applies to beta > 0 only");
  }
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("dilation_certificate needs epsilon in (0, 1]");
  }
  const double beta = spec.beta();
  const double K = std::pow(2.0, beta - 2.0) / epsilon;
  const double mu = std::pow(1.0 + epsilon, 1.0 / beta);
  if (beta == 2.0 && a <= 1.0 + K) {
    throw certificate_error(
        "dilation certificate: residual integrals diverge for a <= 1 + K");
  }

  // Majorant of the power part; empty for p = 0.
  double C = 0.0;
  std::vector<double> exponents;
  if (spec.p() > 0.0) {
    const MajorantData m = binomial_majorant(PotentialSpec(spec.p(), 0.0));
    C = m.constant;
    exponents = m.exponents;
  }
  const auto power_sum = [&](double y) {
    double s = 0.0;
    for (double g : exponents) s += std::pow(std::abs(y), g);
    return s;
  };
  const double gauss_norm = std::sqrt(a / kPi);
  const auto weight = [&](double y) { return gauss_norm * std::exp(-a * y * y); };
  const auto grow = [&](double y) {
    return std::exp((1.0 + K) * std::pow(std::abs(y), beta));
  };

  // Window covering the maximum of exp((1+K)|y|^beta - a y^2).
  double window;
  double finest;
  if (beta == 2.0) {
    window = 24.0 / std::sqrt(a - 1.0 - K);
    finest = 1.0 / std::sqrt(a - 1.0 - K);
  } else {
    const double bump = std::pow((1.0 + K) * beta / (2.0 * a), 1.0 / (2.0 - beta));
    window = 2.0 * bump + 24.0 / std::sqrt(a);
    finest = 1.0 / std::sqrt(a);
  }
  QuadratureOptions opt;
  opt.min_depth = forced_depth(window, finest);

  const double residual_main = integrate_line(
      [&](double y) {
        return ((1.0 + 2.0 * C * power_sum(y)) * grow(y) - 1.0) * weight(y);
      },
      0.0, window, opt);
  const double residual_tail =
      C == 0.0 ? 0.0
               : integrate_line(
                     [&](double y) {
                       return std::exp(2.0) * C * power_sum(y) * grow(y) * weight(y);
                     },
                     0.0, window, opt);

  DilationCertificate cert{epsilon, K,
                           mu,      a,
                           residual_main, residual_tail,
                           residual_main < 1.0 && residual_tail < 1.0};

  if (cert.valid) {
    for (int i = 0; i <= 200; ++i) {
      const double x = -10.0 + i * 0.1;
      const double lhs = heat_smooth(spec, a, x);
      const double rhs = 2.0 * (spec.value(mu * x) + 1.0);
      if (lhs > rhs * (1.0 + 1e-9)) {
        throw numeric_error("dilation certificate violated on sample grid");
      }
    }
  }
  return cert;
}

}  // namespace fdo
