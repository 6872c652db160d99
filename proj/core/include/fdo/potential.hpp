#pragma once

#include <functional>
#include <vector>

#include "fdo/errors.hpp"

namespace fdo {

/// Potential family W(x) = |x|^p * exp(|x|^beta) on the line.
/// beta = 0 means the pure power |x|^p (no exponential factor).
/// Requires p >= 0, beta in [0, 2], not both zero.  W is even, continuous,
/// nondecreasing on [0, inf) and blows up at infinity.
class PotentialSpec {
 public:
  PotentialSpec(double p, double beta);

  double p() const { return p_; }
  double beta() const { return beta_; }

  double value(double x) const;
  double value_at_zero() const;  // 0 for p > 0, 1 for p = 0

  /// W'(x) = (p x^{p-1} + beta x^{p+beta-1}) e^{x^beta} for x > 0.
  double derivative(double x) const;

  /// Unique y >= 0 with W(y) = v, for v >= W(0).  Closed form for the pure
  /// power and pure exponential cases; safeguarded bisection plus Newton
  /// polish otherwise.  Relative tolerance 1e-12.
  double inverse(double v) const;

  /// (log v)^{1/beta} for beta > 0, v^{1/p} for beta = 0.
  /// Requires v > max(W(0), 1).
  double inverse_asymptotic(double v) const;

 private:
  double p_;
  double beta_;
};

/// Two-variable majorant |x-y|^p <= |x|^p + C (1+|x|^p) sum_g |y|^g with
/// explicit exponents, valid for all real x, y.  Constants come from exact
/// multinomial coefficients, never from fitting.
struct MajorantData {
  double constant;                // C
  std::vector<double> exponents;  // gamma set, ascending
  double min_exponent;            // gamma_0
};

/// Builds the majorant for the pure power case (beta = 0, p > 0) and checks
/// it on a deterministic 10^4-point sample of [-50, 50]^2.
MajorantData binomial_majorant(const PotentialSpec& spec);

/// Verified inequality (W * g_a^2)(x) <= (1 + sigma) W(x) + tau  (beta = 0).
struct AffineCertificate {
  double sigma;
  double tau;
  double a;
};

/// Verified inequality (W * g_a^2)(x) <= 2 (W(mu x) + 1)  (beta > 0).
/// valid is set when both residual integrals are < 1; only then is the
/// pointwise inequality certified.
struct DilationCertificate {
  double epsilon;
  double K;
  double mu;
  double a;
  double residual_main;
  double residual_tail;
  bool valid;
};

/// (W * g_a^2)(x) where g_a^2 is the centered Gaussian density of variance
/// 1/(2a).  Adaptive quadrature with dyadic tail shells; relative tolerance
/// 1e-10.  For beta = 2 the smoothing only exists for a > 1.
double heat_smooth(const PotentialSpec& spec, double a, double x);

/// Same smoothing applied to an arbitrary continuous function that grows at
/// most like exp(c|x|).  Validation hook (e.g. w = cosh).
double heat_smooth(const std::function<double(double)>& w, double a, double x);

/// sigma = tau = C' * sum_g m_g(a) from the binomial majorant and the
/// closed-form Gaussian absolute moments; re-verified pointwise on a
/// 10^3-point sample through heat_smooth.
AffineCertificate affine_certificate(const PotentialSpec& spec, double a);

/// K = 2^{beta-2}/epsilon, mu = (1+epsilon)^{1/beta}; evaluates the two
/// residual integrals by quadrature and, when both are < 1, sample-verifies
/// the dilation inequality on [-10, 10].
DilationCertificate dilation_certificate(const PotentialSpec& spec, double a,
                                         double epsilon);

}  // namespace fdo
