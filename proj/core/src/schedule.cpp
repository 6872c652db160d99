#include "fdo/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fdo/coherent.hpp"

namespace fdo {

ScaleSchedule make_schedule(const PotentialSpec& spec, double lambda,
                            std::optional<double> a_override,
                            std::optional<double> epsilon_override) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("make_schedule needs finite lambda > 0");
  }
  ScaleSchedule sched;
  sched.lambda = lambda;

  if (spec.beta() == 0.0) {
    if (!a_override && !(lambda >= std::exp(std::exp(1.0)) * (1.0 - 1e-12))) {
      throw std::invalid_argument(
          "make_schedule: default scale a = log log lambda needs lambda >= e^e");
    }
    sched.a = a_override.value_or(std::log(std::log(lambda)));
    const AffineCertificate cert = affine_certificate(spec, sched.a);
    sched.sigma = cert.sigma;
    sched.tau = cert.tau;
    sched.s = sched.a / kSixteenPiSquared;
    sched.lambda1 = (1.0 + sched.sigma) * lambda + sched.tau;
    sched.C1 = 0.5 * (1.0 + sched.sigma) * std::exp(-sched.s);
    sched.lambda2 = (lambda - sched.tau) / (1.0 + sched.sigma);
    sched.C2 = std::exp(sched.s) / (1.0 + sched.sigma);
    return sched;
  }

  const bool overridden = a_override && epsilon_override;
  if (!overridden &&
      !(lambda >= std::exp(std::exp(std::exp(1.0))) * (1.0 - 1e-12))) {
    throw std::invalid_argument(
        "make_schedule: default scales for beta > 0 need lambda >= e^(e^e); "
        "supply a and epsilon overrides below that");
  }
  sched.a = a_override.value_or(std::log(std::log(lambda)));
  sched.epsilon = epsilon_override.value_or(
      std::min(1.0, 1.0 / std::log(std::log(std::log(lambda)))));
  const DilationCertificate cert =
      dilation_certificate(spec, sched.a, sched.epsilon);
  if (!cert.valid) {
    std::ostringstream msg;
    msg << "dilation certificate invalid at a = " << sched.a
        << ", epsilon = " << sched.epsilon
        << " (residuals " << cert.residual_main << ", " << cert.residual_tail
        << "); raise a or lambda";
    throw certificate_error(msg.str());
  }
  // The upper-bound chain rescales the argument by 1/mu, which is the same
  // certificate at parameter a mu^2; certify that scale as well.
  const DilationCertificate rescaled =
      dilation_certificate(spec, sched.a * cert.mu * cert.mu, sched.epsilon);
  if (!rescaled.valid) {
    throw certificate_error(
        "dilation certificate invalid at the rescaled parameter a mu^2");
  }
  sched.K = cert.K;
  sched.mu = cert.mu;
  sched.s = sched.a / kSixteenPiSquared;
  sched.lambda1 = 2.0 * (lambda + 1.0);
  sched.C1 = std::exp(-sched.s);
  sched.lambda2 = 0.5 * lambda - 1.0;
  sched.C2 = 0.5 * std::exp(sched.s);
  return sched;
}

double upper_bound(const PotentialSpec& spec, const ScaleSchedule& sched) {
  if (!(sched.C1 < sched.lambda1)) {
    return std::numeric_limits<double>::infinity();  // vacuous bound
  }
  const double prefactor =
      spec.beta() == 0.0 ? 1.0 / (1.0 + sched.sigma) : 0.5 * sched.mu;
  return prefactor *
         quadrant_integral(PhaseSpaceQuery(sched.lambda1, sched.C1, spec));
}

double lower_bound(const PotentialSpec& spec, const ScaleSchedule& sched) {
  if (!(sched.C2 < sched.lambda2)) return 0.0;
  const double prefactor =
      spec.beta() == 0.0 ? 1.0 + sched.sigma : 2.0 / sched.mu;
  return prefactor *
         quadrant_integral(PhaseSpaceQuery(sched.lambda2, sched.C2, spec));
}

std::vector<BoundReport> sandwich_report(const PotentialSpec& spec,
                                         const std::vector<double>& lambdas,
                                         const Grid& grid,
                                         std::optional<double> a_override,
                                         std::optional<double> epsilon_override) {
  if (lambdas.empty()) throw std::invalid_argument("sandwich_report: empty sweep");
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > lambdas[i - 1])) {
      throw std::invalid_argument("sandwich_report: lambdas must increase");
    }
  }
  const ResolutionDiagnostics diag =
      resolution_check(grid, spec, lambdas.back(), 2.0);
  if (!diag.ok()) {
    std::ostringstream msg;
    msg << "grid cannot resolve lambda_max = " << diag.lambda_max
        << " at margin " << diag.margin
        << " (frequency headroom " << diag.frequency_headroom
        << ", domain headroom " << diag.domain_headroom << ")";
    throw resolution_error(msg.str());
  }
  const SpectrumResult spectrum = eigenvalues(assemble(grid, spec));

  std::vector<BoundReport> reports;
  reports.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const ScaleSchedule sched =
        make_schedule(spec, lambda, a_override, epsilon_override);
    BoundReport r{};
    r.lambda = lambda;
    r.lower = lower_bound(spec, sched);
    r.upper = upper_bound(spec, sched);
    r.riesz = riesz_mean(spectrum, lambda);
    // diagnostic column; evaluated below lambda = e as well
    r.leading = evaluate(leading_term_for(spec), lambda);
    r.riesz_over_leading = r.riesz / r.leading;
    r.lower_over_leading = r.lower / r.leading;
    r.upper_over_leading = r.upper / r.leading;
    if (r.lower > r.upper * (1.0 + 1e-12)) {
      throw numeric_error("bound report: lower bound exceeded upper bound");
    }
    const double slack = 0.005 * r.riesz;
    if (r.riesz < r.lower - slack || r.riesz > r.upper + slack) {
      std::ostringstream msg;
      msg << "sandwich violated at lambda = " << lambda << ": " << r.lower
          << " <= " << r.riesz << " <= " << r.upper << " failed";
      throw numeric_error(msg.str());
    }
    reports.push_back(r);
  }
  return reports;
}

double integrated_counting(const std::vector<double>& sorted_eigenvalues,
                           double lambda) {
  // N(t) is piecewise constant: integrate k over [lambda_k, lambda_{k+1}).
  double acc = 0.0;
  const std::size_t n = sorted_eigenvalues.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = sorted_eigenvalues[k];
    if (lo >= lambda) break;
    const double hi = (k + 1 < n) ? std::min(sorted_eigenvalues[k + 1], lambda)
                                  : lambda;
    acc += static_cast<double>(k + 1) * (hi - lo);
  }
  return acc;
}

double karamata_check(const SpectrumResult& spectrum, double lambda) {
  const double riesz = riesz_mean(spectrum, lambda);
  const double layer_cake = integrated_counting(spectrum.eigenvalues, lambda);
  return std::abs(riesz - layer_cake);
}

RatioDiagnostics ratio_series(const std::vector<std::pair<double, double>>& values,
                              const LeadingTerm& predictor) {
  if (values.size() < 3) {
    throw std::invalid_argument("ratio_series needs at least 3 points");
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i].first > values[i - 1].first)) {
      throw std::invalid_argument("ratio_series: lambdas must strictly increase");
    }
  }
  RatioDiagnostics diag;
  diag.ratios.reserve(values.size());
  for (const auto& [lambda, measured] : values) {
    diag.ratios.push_back(measured / evaluate(predictor, lambda));
  }
  diag.deltas.reserve(values.size() - 1);
  diag.monotone_trend = true;
  for (std::size_t i = 1; i < diag.ratios.size(); ++i) {
    diag.deltas.push_back(diag.ratios[i] - diag.ratios[i - 1]);
    if (std::abs(diag.ratios[i] - 1.0) > std::abs(diag.ratios[i - 1] - 1.0)) {
      diag.monotone_trend = false;
    }
  }
  return diag;
}

}  // namespace fdo
