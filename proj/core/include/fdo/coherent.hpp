#pragma once

#include <complex>
#include <vector>

#include "fdo/errors.hpp"

namespace fdo {

class PotentialSpec;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSixteenPiSquared = 16.0 * kPi * kPi;

/// Normalized Gaussian window g_a(y) = (a/pi)^{1/4} exp(-a y^2 / 2) together
/// with its two heat times: convolution with g_a^2 is heat propagation for
/// time t = 1/(4a) in position, convolution with ghat_a^2 for time
/// s = a/(16 pi^2) in frequency.  t*s = 1/(64 pi^2) identically.
struct GaussianParam {
  double a;
  double t;
  double s;
  explicit GaussianParam(double a_in);
};

double gaussian_eval(const GaussianParam& g, double y);

/// g_a^2: the centered normal density with variance 1/(2a).
double gaussian_sq(const GaussianParam& g, double y);

/// Closed-form transform under the e^{-2 pi i x xi} convention;
/// ghat_a = g_{4 pi^2 / a}.
double gaussian_hat(const GaussianParam& g, double xi);

/// ghat_a^2: the centered normal density with variance a/(8 pi^2).
double gaussian_hat_sq(const GaussianParam& g, double xi);

/// Central absolute moment of g_a^2 in closed form:
/// int |y|^gamma g_a^2(y) dy = Gamma((gamma+1)/2) / (sqrt(pi) a^{gamma/2}).
double abs_moment(const GaussianParam& g, double gamma);

/// e^{-s}: the damping of the cosh multiplier when moved to coherent-state
/// space, i.e. the T(k) with (T * ghat_a^2)(k) = cosh(k) is e^{-s} cosh(k).
double kinetic_multiplier(const GaussianParam& g);

/// max over k in [-5, 5] of |(T * ghat_a^2)(k) - cosh k| / cosh k with the
/// convolution done by quadrature.
double kinetic_multiplier_residual(const GaussianParam& g);

/// Unit-normalized test function sampled on a uniform grid (power-of-two
/// size so windowed transforms can use the radix-2 FFT).
class TestFunction {
 public:
  enum class Kind { gaussian, hermite, custom };

  static TestFunction gaussian(double a, double half_extent = 26.0, int n = 1024);
  static TestFunction hermite(int index, double half_extent = 26.0, int n = 1024);
  static TestFunction custom(std::vector<std::complex<double>> samples, double x0,
                             double spacing);

  Kind kind() const { return kind_; }
  int size() const { return static_cast<int>(samples_.size()); }
  double x0() const { return x0_; }
  double spacing() const { return spacing_; }
  double node(int i) const { return x0_ + i * spacing_; }
  const std::vector<std::complex<double>>& samples() const { return samples_; }

 private:
  TestFunction(Kind kind, std::vector<std::complex<double>> samples, double x0,
               double spacing);
  Kind kind_;
  std::vector<std::complex<double>> samples_;
  double x0_;
  double spacing_;
};

/// Windowed transform psi~(k, y) = int e^{-2 pi i k x} g_a(x - y) psi(x) dx
/// by grid quadrature.  Throws when the window mass off the grid exceeds 1e-8.
std::complex<double> transform(const TestFunction& psi, const GaussianParam& g,
                               double k, double y);

/// Residuals of the marginal and potential identities, each side computed
/// independently on the shared grid:
///   r_k: max_y | int |psi~|^2 dk - (|psi|^2 * g_a^2)(y) |
///   r_y: max_k | int |psi~|^2 dy - (|psihat|^2 * ghat_a^2)(k) |
///   r_w: | int int W(y) |psi~|^2 dk dy - int (W * g_a^2) |psi|^2 dx |
/// potential_scale multiplies W on both sides (0 gives the exact-zero hook).
struct MarginalResiduals {
  double r_k;
  double r_y;
  double r_w;
};
MarginalResiduals marginal_residuals(const TestFunction& psi, const GaussianParam& g,
                                     const PotentialSpec& w,
                                     double potential_scale = 1.0);

/// int int |psi~(k, y)|^2 dk dy; equals 1 for unit psi.
double plancherel_total(const TestFunction& psi, const GaussianParam& g);

}  // namespace fdo
