#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "fdo/errors.hpp"

namespace fdo {

/// Tolerances for the adaptive integrators.  A panel is accepted when its
/// Richardson error estimate drops below the absolute tolerance or below the
/// relative tolerance times a coarse scale of the integral, whichever is
/// weaker.  Refinement order is deterministic (left before right).
struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 60;
  int min_depth = 3;
};

namespace detail {

template <typename F>
double simpson_recurse(F& f, double a, double m, double b, double fa, double fm,
                       double fb, double whole, double tol, int depth,
                       const QuadratureOptions& opt) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  const double err = refined - whole;
  if (depth >= opt.min_depth && std::abs(err) <= 15.0 * tol) {
    return refined + err / 15.0;
  }
  if (depth >= opt.max_depth) {
    throw numeric_error("adaptive quadrature did not converge");
  }
  return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, opt) +
         simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, opt);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [lo, hi].  Returns 0 for hi <= lo.
template <typename F>
double integrate(F&& f, double lo, double hi, const QuadratureOptions& opt = {}) {
  if (!(hi > lo)) return 0.0;
  // Coarse |f| scale so the relative tolerance has something to bite on.
  double scale = 0.0;
  constexpr int kScaleSamples = 32;
  for (int i = 0; i <= kScaleSamples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / kScaleSamples;
    scale += std::abs(f(x));
  }
  scale *= (hi - lo) / (kScaleSamples + 1);
  const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);

  const double m = 0.5 * (lo + hi);
  const double fa = f(lo);
  const double fm = f(m);
  const double fb = f(hi);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, lo, m, hi, fa, fm, fb, whole, tol, 0, opt);
}

/// Integral of f over the whole line for integrands that decay once far from
/// `center`.  Starts from [center-width, center+width] and keeps appending
/// dyadic shells until two consecutive shells contribute below tolerance.
template <typename F>
double integrate_line(F&& f, double center, double width,
                      const QuadratureOptions& opt = {}) {
  double total = integrate(f, center - width, center + width, opt);
  double w = width;
  int quiet = 0;
  for (int shell = 0; shell < 64; ++shell) {
    const double left = integrate(f, center - 2.0 * w, center - w, opt);
    const double right = integrate(f, center + w, center + 2.0 * w, opt);
    total += left + right;
    const double cutoff = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    quiet = (std::abs(left) + std::abs(right) <= cutoff) ? quiet + 1 : 0;
    if (quiet >= 2) return total;
    w *= 2.0;
  }
  throw numeric_error("tail of line integral did not converge");
}

}  // namespace fdo
