#include "fdo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fdo {

Grid build_grid(double half_extent, int n) {
  if (!(half_extent > 0.0)) throw std::invalid_argument("grid: L must be > 0");
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("grid: N must be even and >= 8");
  }
  return Grid{half_extent, n, 2.0 * half_extent / n};
}

SymOperator::SymOperator(Grid grid, PotentialSpec potential, std::vector<double> dense)
    : grid_(grid), potential_(potential), data_(std::move(dense)),
      n_(grid.n), norm_inf_(0.0) {
  if (data_.size() != static_cast<std::size_t>(n_) * n_) {
    throw std::invalid_argument("SymOperator: wrong matrix size");
  }
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs(at(i, j));
    norm_inf_ = std::max(norm_inf_, row);
  }
}

namespace {

// First column of the cosh circulant: c_d = (1/N) sum_m cosh(xi_m) cos(2 pi m d / N).
// Accumulated in long double; the multiplier spans many orders of magnitude
// and the low eigenvalues must not inherit summation noise.
std::vector<double> circulant_column(const Grid& grid) {
  const int n = grid.n;
  if (grid.max_frequency() > 709.0) {
    throw range_overflow_error("cosh multiplier overflows on this grid",
                               grid.max_frequency());
  }
  std::vector<long double> mult(n);
  for (int m = -n / 2; m < n / 2; ++m) {
    mult[m + n / 2] = std::cosh(static_cast<long double>(grid.frequency(m)));
  }
  constexpr long double kTwoPi = 6.283185307179586476925286766559L;
  std::vector<double> col(n);
  // c_d = c_{n-d} exactly; build one half and mirror so A is symmetric to
  // the last bit.
  for (int d = 0; d <= n / 2; ++d) {
    long double acc = 0.0L;
    for (int m = -n / 2; m < n / 2; ++m) {
      acc += mult[m + n / 2] * std::cos(kTwoPi * m * d / n);
    }
    col[d] = static_cast<double>(acc / n);
  }
  for (int d = n / 2 + 1; d < n; ++d) col[d] = col[n - d];
  return col;
}

std::vector<double> dense_from_circulant(const Grid& grid,
                                         const std::vector<double>& col,
                                         const PotentialSpec* spec) {
  const int n = grid.n;
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i) * n + j] = col[(i - j + n) % n];
    }
    if (spec) a[static_cast<std::size_t>(i) * n + i] += spec->value(grid.node(i));
  }
  return a;
}

}  // namespace

SymOperator assemble(const Grid& grid, const PotentialSpec& spec) {
  return SymOperator(grid, spec, dense_from_circulant(grid, circulant_column(grid), &spec));
}

SymOperator assemble_kinetic(const Grid& grid) {
  // The potential slot still needs a spec for metadata; W is not added.
  PotentialSpec placeholder(2.0, 0.0);
  return SymOperator(grid, placeholder,
                     dense_from_circulant(grid, circulant_column(grid), nullptr));
}

ResolutionDiagnostics resolution_check(const Grid& grid, const PotentialSpec& spec,
                                       double lambda_max, double margin) {
  if (!(margin >= 2.0)) throw std::invalid_argument("resolution margin must be >= 2");
  const double need = margin * lambda_max;
  const double xi_max = grid.max_frequency();
  const double freq_reach =
      xi_max > 709.0 ? std::numeric_limits<double>::infinity() : std::cosh(xi_max);
  double domain_reach;
  try {
    domain_reach = spec.value(grid.half_extent);
  } catch (const range_overflow_error&) {
    domain_reach = std::numeric_limits<double>::infinity();
  }
  return ResolutionDiagnostics{freq_reach >= need, domain_reach >= need,
                               freq_reach / need, domain_reach / need,
                               lambda_max, margin};
}

// --- dense symmetric eigensolver ---------------------------------------------
//
// Householder reduction to tridiagonal form followed by QL iteration with
// implicit Wilkinson shifts.  The eigenvalue-only path runs in long double:
// assembled operators carry ||A|| ~ cosh(max xi), and grid-convergence checks
// compare low eigenvalues across grids at 1e-8 absolute.

namespace detail {

template <typename Real>
void householder_values(std::vector<Real>& a, int n, std::vector<Real>& d,
                        std::vector<Real>& sub) {
  std::vector<Real> e(n, Real(0));
  auto at = [&](int i, int j) -> Real& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    Real h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == Real(0)) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        Real f = at(i, l);
        Real g = f >= Real(0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          g = 0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const Real hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
  }
  d.resize(n);
  sub.assign(std::max(n - 1, 0), Real(0));
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
  for (int i = 1; i < n; ++i) sub[i - 1] = e[i];
}

// Full tred2-style reduction accumulating the orthogonal transform in a.
template <typename Real>
void householder_vectors(std::vector<Real>& a, int n, std::vector<Real>& d,
                         std::vector<Real>& sub) {
  std::vector<Real> e(n, Real(0));
  std::vector<Real> dd(n, Real(0));
  auto at = [&](int i, int j) -> Real& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    Real h = 0, scale = 0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == Real(0)) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        Real f = at(i, l);
        Real g = f >= Real(0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0;
        for (int j = 0; j <= l; ++j) {
          at(j, i) = at(i, j) / h;  // stored for the back-accumulation
          g = 0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const Real hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    dd[i] = h;
  }
  dd[0] = 0;
  e[0] = 0;
  for (int i = 0; i < n; ++i) {  // accumulate transforms
    const int l = i - 1;
    if (dd[i] != Real(0)) {
      for (int j = 0; j <= l; ++j) {
        Real g = 0;
        for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
        for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
      }
    }
    dd[i] = at(i, i);
    at(i, i) = 1;
    for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0;
  }
  d.resize(n);
  sub.assign(std::max(n - 1, 0), Real(0));
  for (int i = 0; i < n; ++i) d[i] = dd[i];
  for (int i = 1; i < n; ++i) sub[i - 1] = e[i];
}

// Implicit-shift QL on the tridiagonal (d, sub); optionally rotates the rows
// of z (row-major n x n) so its columns become eigenvectors.
template <typename Real>
void ql_implicit(std::vector<Real>& d, std::vector<Real>& sub, int n,
                 std::vector<Real>* z) {
  if (n <= 1) return;
  const Real eps = std::numeric_limits<Real>::epsilon();
  std::vector<Real> e(sub.begin(), sub.end());
  e.push_back(Real(0));
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const Real dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 50) {
          throw numeric_error("QL iteration did not converge within 50 sweeps");
        }
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = std::hypot(g, Real(1));
        g = d[m] - d[l] + e[l] / (g + (g >= Real(0) ? std::abs(r) : -std::abs(r)));
        Real s = 1, c = 1, p = 0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          Real f = s * e[i];
          const Real b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == Real(0)) {  // recover from underflow and retry the sweep
            d[i + 1] -= p;
            e[m] = 0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (int k = 0; k < n; ++k) {
              Real& zk1 = (*z)[static_cast<std::size_t>(k) * n + i + 1];
              Real& zk0 = (*z)[static_cast<std::size_t>(k) * n + i];
              f = zk1;
              zk1 = s * zk0 + c * f;
              zk0 = c * zk0 - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
}

}  // namespace detail

std::vector<double> symmetric_eigenvalues(std::vector<double> dense, int n) {
  std::vector<long double> a(dense.begin(), dense.end());
  std::vector<long double> d, sub;
  detail::householder_values(a, n, d, sub);
  detail::ql_implicit<long double>(d, sub, n, nullptr);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<double>(d[i]);
  std::sort(out.begin(), out.end());
  return out;
}

EigenSystem symmetric_eigensystem(std::vector<double> dense, int n) {
  std::vector<double> d, sub;
  detail::householder_vectors(dense, n, d, sub);
  detail::ql_implicit<double>(d, sub, n, &dense);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  EigenSystem sys;
  sys.n = n;
  sys.values.resize(n);
  sys.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    sys.values[j] = d[order[j]];
    for (int i = 0; i < n; ++i) {
      sys.vectors[static_cast<std::size_t>(i) * n + j] =
          dense[static_cast<std::size_t>(i) * n + order[j]];
    }
  }
  return sys;
}

ResolutionDiagnostics SpectrumResult::resolution(double lambda_max,
                                                 double margin) const {
  return resolution_check(grid, potential, lambda_max, margin);
}

SpectrumResult eigenvalues(const SymOperator& op) {
  SpectrumResult res{symmetric_eigenvalues(op.data(), op.size()), op.grid(),
                     op.potential()};
  if (!res.eigenvalues.empty() && res.eigenvalues.front() < 1.0 - 1e-9) {
    throw numeric_error("spectrum dips below the H >= 1 form bound");
  }
  return res;
}

int inertia_below(std::vector<double> dense, int n, double lambda) {
  auto at = [&](int i, int j) -> double& {
    return dense[static_cast<std::size_t>(i) * n + j];
  };
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    at(i, i) -= lambda;
    norm = std::max(norm, std::abs(at(i, i)));
  }
  const double breakdown = 1e-14 * std::max(norm, 1.0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int negatives = 0;
  for (int k = 0; k < n; ++k) {
    // Symmetric pivoting: bring the largest remaining diagonal entry to k.
    int pivot = k;
    for (int q = k + 1; q < n; ++q) {
      if (std::abs(at(q, q)) > std::abs(at(pivot, pivot))) pivot = q;
    }
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, pivot));
    }
    const double dkk = at(k, k);
    if (std::abs(dkk) <= breakdown) {
      throw numeric_error("LDL^T factorization broke down (near-zero pivot)");
    }
    if (dkk < 0.0) ++negatives;
    for (int i = k + 1; i < n; ++i) {
      const double lik = at(i, k) / dkk;
      if (lik == 0.0) continue;
      for (int j = k + 1; j <= i; ++j) at(i, j) -= lik * at(k, j);
      for (int j = k + 1; j <= i; ++j) at(j, i) = at(i, j);
    }
  }
  return negatives;
}

int count_below(const SymOperator& op, double lambda) {
  const double shifted = lambda + 1e-12 * op.norm_inf();  // closed counting
  try {
    return inertia_below(op.data(), op.size(), shifted);
  } catch (const numeric_error&) {
    return count_from_sorted(symmetric_eigenvalues(op.data(), op.size()), lambda);
  }
}

double riesz_mean(const std::vector<double>& sorted_eigenvalues, double lambda) {
  double sum = 0.0;
  for (double ev : sorted_eigenvalues) {
    if (ev >= lambda) break;
    sum += lambda - ev;
  }
  return sum;
}

double riesz_mean(const SpectrumResult& spectrum, double lambda) {
  return riesz_mean(spectrum.eigenvalues, lambda);
}

int count_from_sorted(const std::vector<double>& sorted_eigenvalues, double lambda) {
  return static_cast<int>(std::upper_bound(sorted_eigenvalues.begin(),
                                           sorted_eigenvalues.end(), lambda) -
                          sorted_eigenvalues.begin());
}

}  // namespace fdo
