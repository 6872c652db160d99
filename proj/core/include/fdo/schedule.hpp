#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fdo/errors.hpp"
#include "fdo/phasespace.hpp"
#include "fdo/potential.hpp"
#include "fdo/spectral.hpp"

namespace fdo {

/// All lambda-dependent scales feeding the two-sided Riesz-mean bounds.
/// Pure power branch (beta = 0), with certified sigma = tau:
///   lambda1 = (1+sigma) lambda + tau,   C1 = (1+sigma) e^{-s} / 2,
///   lambda2 = (lambda - tau)/(1+sigma), C2 = e^{s} / (1+sigma).
/// Exponential branch (beta > 0):
///   lambda1 = 2 (lambda + 1), C1 = e^{-s};  lambda2 = lambda/2 - 1, C2 = e^{s}/2.
struct ScaleSchedule {
  double lambda = 0.0;
  double a = 0.0;
  double s = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
  double epsilon = 0.0;
  double K = 0.0;
  double mu = 1.0;
  double C1 = 0.0;
  double C2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Default scales a = log log lambda and (beta > 0) epsilon = 1/log log log
/// lambda; overrides admit any scale for which the certificates hold.
/// Throws certificate_error when the dilation certificate is invalid at the
/// requested scales.
ScaleSchedule make_schedule(const PotentialSpec& spec, double lambda,
                            std::optional<double> a_override = {},
                            std::optional<double> epsilon_override = {});

/// Upper bound on the Riesz mean; +infinity sentinel when C1 >= lambda1
/// (vacuous region).
double upper_bound(const PotentialSpec& spec, const ScaleSchedule& sched);

/// Lower bound on the Riesz mean; 0 when C2 >= lambda2.
double lower_bound(const PotentialSpec& spec, const ScaleSchedule& sched);

struct BoundReport {
  double lambda;
  double lower;
  double upper;
  double riesz;
  double leading;
  double riesz_over_leading;
  double lower_over_leading;
  double upper_over_leading;
};

/// Full pipeline over a strictly increasing lambda sweep: one eigensolve,
/// then per-lambda bounds, Riesz means and leading-term ratios.  Enforces the
/// resolution check (margin 2) and the sandwich inequality with 0.5% relative
/// slack; violations throw.
std::vector<BoundReport> sandwich_report(const PotentialSpec& spec,
                                         const std::vector<double>& lambdas,
                                         const Grid& grid,
                                         std::optional<double> a_override = {},
                                         std::optional<double> epsilon_override = {});

/// Exact integral of the counting function, int_0^lambda N(t) dt, evaluated
/// piecewise from the sorted eigenvalues.
double integrated_counting(const std::vector<double>& sorted_eigenvalues,
                           double lambda);

/// |sum (lambda - lambda_j)_+  -  int_0^lambda N(t) dt|, the finite-lambda
/// layer-cake identity; both sides from the same sorted data by independent
/// formulas.
double karamata_check(const SpectrumResult& spectrum, double lambda);

struct RatioDiagnostics {
  std::vector<double> ratios;  // measured / predicted
  std::vector<double> deltas;  // successive ratio differences
  bool monotone_trend;         // |ratio - 1| nonincreasing along the sweep
};

/// Convergence diagnostics of measured values against a LeadingTerm
/// predictor; needs >= 3 strictly increasing lambdas.
RatioDiagnostics ratio_series(const std::vector<std::pair<double, double>>& values,
                              const LeadingTerm& predictor);

}  // namespace fdo
