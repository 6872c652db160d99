#pragma once

#include "fdo/errors.hpp"
#include "fdo/potential.hpp"

namespace fdo {

/// Positive-part phase-space integral query: energy lambda, kinetic prefactor
/// C (the e^{+-s} variants), and the potential.  Nonzero values require
/// C < lambda - W(0).
struct PhaseSpaceQuery {
  double lambda;
  double C;
  PotentialSpec spec;

  PhaseSpaceQuery(double lambda_in, double c_in, PotentialSpec spec_in);
};

/// Quadrant-folded integral of (lambda - C e^k - W(y))_+ in its reduced form
///   4 int_C^{lambda-W(0)} du/u int_{W(0)}^{lambda-u} (lambda-u-v) / W'(W^{-1}(v)) dv,
/// with the inner integrand switched back to the y-variable on a fixed sliver
/// at the origin where W' may vanish.
double quadrant_integral(const PhaseSpaceQuery& q);

/// Same quantity by direct two-dimensional quadrature in (k, y), without the
/// v = W(y) substitution.  Companion route for reduction-equivalence checks.
double quadrant_integral_2d(const PhaseSpaceQuery& q);

/// int_{R^2} (lambda - C cosh k - W(y))_+ dk dy, folded by evenness in both
/// variables.
double cosh_integral(const PhaseSpaceQuery& q);

/// One-dimensional hook: int_R (lambda - C cosh k)_+ dk by quadrature.
double kinetic_positive_part(double lambda, double C);

/// The -u portion of the reduced integral, int_C^{lambda-W(0)} W^{-1}(lambda-u) du;
/// bounded by lambda * W^{-1}(lambda).
double offset_integral(const PhaseSpaceQuery& q);

/// Leading asymptotic term of the Riesz mean:
///   beta = 0:  (4p/(p+1)) lambda^{1+1/p} log lambda
///   beta > 0:  4 lambda (log lambda)^{1+1/beta}
struct LeadingTerm {
  double coefficient;
  double lambda_exponent;
  double log_exponent;
};

LeadingTerm leading_term_for(const PotentialSpec& spec);
double evaluate(const LeadingTerm& term, double lambda);
double leading_term(const PotentialSpec& spec, double lambda);  // needs lambda > e

/// int_0^1 u (1-u)^{1/p-1} log u du, finite and negative; evaluated after the
/// substitution 1 - u = t^p which removes the endpoint singularity.
double tail_integral(double p);

/// Residual |LHS - RHS| / (1 + |LHS|) of the integration-by-parts identity
///   int_{C/L}^1 (1-u)^{1/p} (p+u)/u du
///     = log(L/C) (1-C/L)^{1/p} (p+C/L) + ((p+1)/p) int_{C/L}^1 u(1-u)^{1/p-1} log u du
/// with both sides quadrature-evaluated (L = lambda).  Contract: < 1e-9.
double ibp_residual_power(double lambda, double C, double p);

/// Residual |LHS - RHS| / (1 + |LHS|) of the exponential-case identity
/// obtained by integrating (log v)^r by parts on [L_cut, lambda - u];
/// requires L_cut > 1.  Contract: < 1e-9.
double ibp_residual_exp(double lambda, double C, double L_cut, double r);

}  // namespace fdo
