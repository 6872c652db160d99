#include "fdo/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdo/fft.hpp"
#include "fdo/potential.hpp"
#include "fdo/quadrature.hpp"

namespace fdo {

GaussianParam::GaussianParam(double a_in)
    : a(a_in), t(1.0 / (4.0 * a_in)), s(a_in / kSixteenPiSquared) {
  if (!(a_in > 0.0)) throw std::invalid_argument("GaussianParam needs a > 0");
}

double gaussian_eval(const GaussianParam& g, double y) {
  return std::pow(g.a / kPi, 0.25) * std::exp(-0.5 * g.a * y * y);
}

double gaussian_sq(const GaussianParam& g, double y) {
  return std::sqrt(g.a / kPi) * std::exp(-g.a * y * y);
}

double gaussian_hat(const GaussianParam& g, double xi) {
  // ghat_a = g_{a'} with a' = 4 pi^2 / a under the e^{-2 pi i x xi} convention.
  return std::pow(4.0 * kPi / g.a, 0.25) * std::exp(-2.0 * kPi * kPi * xi * xi / g.a);
}

double gaussian_hat_sq(const GaussianParam& g, double xi) {
  return std::sqrt(4.0 * kPi / g.a) * std::exp(-4.0 * kPi * kPi * xi * xi / g.a);
}

double abs_moment(const GaussianParam& g, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("abs_moment needs gamma > 0");
  return std::tgamma(0.5 * (gamma + 1.0)) /
         (std::sqrt(kPi) * std::pow(g.a, 0.5 * gamma));
}

double kinetic_multiplier(const GaussianParam& g) { return std::exp(-g.s); }

double kinetic_multiplier_residual(const GaussianParam& g) {
  const double damping = kinetic_multiplier(g);
  const double sd = std::sqrt(g.a / (8.0 * kPi * kPi));
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double k = -5.0 + 0.1 * i;
    const double conv = integrate_line(
        [&](double xi) { return damping * std::cosh(k - xi) * gaussian_hat_sq(g, xi); },
        0.0, 12.0 * sd + 2.0);
    worst = std::max(worst, std::abs(conv - std::cosh(k)) / std::cosh(k));
  }
  return worst;
}

TestFunction::TestFunction(Kind kind, std::vector<std::complex<double>> samples,
                           double x0, double spacing)
    : kind_(kind), samples_(std::move(samples)), x0_(x0), spacing_(spacing) {}

namespace {

void normalize(std::vector<std::complex<double>>& v, double h) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  s *= h;
  const double scale = 1.0 / std::sqrt(s);
  for (auto& z : v) z *= scale;
}

}  // namespace

TestFunction TestFunction::gaussian(double a, double half_extent, int n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("TestFunction grid size must be a power of two");
  }
  const GaussianParam g(a);
  const double h = 2.0 * half_extent / n;
  std::vector<std::complex<double>> v(n);
  for (int i = 0; i < n; ++i) v[i] = gaussian_eval(g, -half_extent + i * h);
  normalize(v, h);
  return TestFunction(Kind::gaussian, std::move(v), -half_extent, h);
}

TestFunction TestFunction::hermite(int index, double half_extent, int n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("TestFunction grid size must be a power of two");
  }
  if (index < 0 || index > 12) {
    throw std::invalid_argument("TestFunction::hermite supports indices 0..12");
  }
  const double h = 2.0 * half_extent / n;
  std::vector<std::complex<double>> v(n);
  for (int i = 0; i < n; ++i) {
    const double x = -half_extent + i * h;
    double h0 = 1.0, h1 = 2.0 * x;
    double hk = index == 0 ? h0 : h1;
    for (int k = 2; k <= index; ++k) {
      hk = 2.0 * x * h1 - 2.0 * (k - 1) * h0;
      h0 = h1;
      h1 = hk;
    }
    v[i] = hk * std::exp(-0.5 * x * x);
  }
  normalize(v, h);
  return TestFunction(Kind::hermite, std::move(v), -half_extent, h);
}

TestFunction TestFunction::custom(std::vector<std::complex<double>> samples, double x0,
                                  double spacing) {
  if (!is_power_of_two(static_cast<int>(samples.size()))) {
    throw std::invalid_argument("TestFunction grid size must be a power of two");
  }
  double s = 0.0;
  for (const auto& z : samples) s += std::norm(z);
  s *= spacing;
  if (std::abs(s - 1.0) > 1e-10) {
    throw std::invalid_argument("custom TestFunction must be unit-normalized");
  }
  return TestFunction(Kind::custom, std::move(samples), x0, spacing);
}

namespace {

double normal_upper_tail(double z) {  // P(N(0,1) > z)
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

void check_window_on_grid(const TestFunction& psi, const GaussianParam& g, double y) {
  // g_a^2(. - y) is a normal density centered at y with sd 1/sqrt(2a).
  const double sd = 1.0 / std::sqrt(2.0 * g.a);
  const double lo = psi.x0();
  const double hi = psi.node(psi.size() - 1);
  const double off = normal_upper_tail((hi - y) / sd) + normal_upper_tail((y - lo) / sd);
  if (off > 1e-8) {
    throw numeric_error("coherent transform: window mass off the grid exceeds 1e-8");
  }
}

}  // namespace

std::complex<double> transform(const TestFunction& psi, const GaussianParam& g,
                               double k, double y) {
  check_window_on_grid(psi, g, y);
  const double h = psi.spacing();
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < psi.size(); ++i) {
    const double x = psi.node(i);
    const double phase = -2.0 * kPi * k * x;
    acc += std::complex<double>(std::cos(phase), std::sin(phase)) *
           gaussian_eval(g, x - y) * psi.samples()[i];
  }
  return acc * h;
}

namespace {

// |psi~(k_m, y_j)|^2 for every DFT bin m and grid point y_j, plus the k- and
// y-integrals of each row/column.  Shared by the identity checks.
struct TransformTable {
  int n;
  double h, dk;
  std::vector<double> mag;     // mag[m * n + j]
  std::vector<double> k_int;   // dk * column sums: int |psi~|^2 dk at y_j
};

TransformTable build_table(const TestFunction& psi, const GaussianParam& g) {
  const int n = psi.size();
  TransformTable t;
  t.n = n;
  t.h = psi.spacing();
  t.dk = 1.0 / (n * t.h);
  t.mag.assign(static_cast<std::size_t>(n) * n, 0.0);
  t.k_int.assign(n, 0.0);
  std::vector<std::complex<double>> buf(n);
  const double h2 = t.h * t.h;
  for (int j = 0; j < n; ++j) {
    const double y = psi.node(j);
    for (int i = 0; i < n; ++i) {
      buf[i] = gaussian_eval(g, psi.node(i) - y) * psi.samples()[i];
    }
    fft_radix2(buf);
    double col = 0.0;
    for (int m = 0; m < n; ++m) {
      const double v = h2 * std::norm(buf[m]);
      t.mag[static_cast<std::size_t>(m) * n + j] = v;
      col += v;
    }
    t.k_int[j] = t.dk * col;
  }
  return t;
}

}  // namespace

MarginalResiduals marginal_residuals(const TestFunction& psi, const GaussianParam& g,
                                     const PotentialSpec& w, double potential_scale) {
  const int n = psi.size();
  if (std::abs(psi.samples().front()) > 1e-12 ||
      std::abs(psi.samples().back()) > 1e-12) {
    throw numeric_error("marginal_residuals: psi does not decay at the grid edge");
  }
  const TransformTable t = build_table(psi, g);
  const double h = t.h;

  // Position marginal against (|psi|^2 * g_a^2)(y), both on the shared grid.
  double r_k = 0.0;
  for (int j = 0; j < n; ++j) {
    const double y = psi.node(j);
    double conv = 0.0;
    for (int i = 0; i < n; ++i) {
      conv += std::norm(psi.samples()[i]) * gaussian_sq(g, y - psi.node(i));
    }
    conv *= h;
    r_k = std::max(r_k, std::abs(t.k_int[j] - conv));
  }

  // Frequency marginal against (|psihat|^2 * ghat_a^2)(k);  psihat comes from
  // the plain transform of psi, ghat from its closed form.
  std::vector<std::complex<double>> spec_buf(psi.samples());
  fft_radix2(spec_buf);
  std::vector<double> power(n);
  for (int m = 0; m < n; ++m) power[m] = h * h * std::norm(spec_buf[m]);
  double r_y = 0.0;
  for (int m = 0; m < n; ++m) {
    const int mm = m < n / 2 ? m : m - n;  // signed frequency index
    const double k = mm * t.dk;
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += t.mag[static_cast<std::size_t>(m) * n + j];
    row *= h;
    double conv = 0.0;
    for (int mp = 0; mp < n; ++mp) {
      const int mms = mp < n / 2 ? mp : mp - n;
      conv += power[mp] * gaussian_hat_sq(g, k - mms * t.dk);
    }
    conv *= t.dk;
    r_y = std::max(r_y, std::abs(row - conv));
  }

  // Potential identity; scale 0 short-circuits both sides to exactly zero.
  double r_w = 0.0;
  if (potential_scale != 0.0) {
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) {
      lhs += potential_scale * w.value(psi.node(j)) * t.k_int[j];
    }
    lhs *= h;
    double rhs = 0.0;
    for (int i = 0; i < n; ++i) {
      const double density = std::norm(psi.samples()[i]);
      if (density < 1e-20) continue;
      rhs += potential_scale * heat_smooth(w, g.a, psi.node(i)) * density;
    }
    rhs *= h;
    r_w = std::abs(lhs - rhs);
  }
  return MarginalResiduals{r_k, r_y, r_w};
}

double plancherel_total(const TestFunction& psi, const GaussianParam& g) {
  const TransformTable t = build_table(psi, g);
  double total = 0.0;
  for (double v : t.k_int) total += v;
  return total * t.h;
}

}  // namespace fdo
