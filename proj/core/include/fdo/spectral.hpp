#pragma once

#include <vector>

#include "fdo/errors.hpp"
#include "fdo/potential.hpp"

namespace fdo {

/// Truncated uniform position grid with its discrete frequency set.
/// Nodes x_j = -L + j h, j = 0..N-1, h = 2L/N; frequencies xi_m = m/(N h)
/// for m = -N/2 .. N/2-1, so max |xi| = 1/(2h).
struct Grid {
  double half_extent;
  int n;
  double spacing;

  double node(int j) const { return -half_extent + j * spacing; }
  double frequency(int m) const { return m / (n * spacing); }
  double max_frequency() const { return 1.0 / (2.0 * spacing); }
};

Grid build_grid(double half_extent, int n);

/// Dense real-symmetric discretization A = C + diag(W(x_j)) where C is the
/// circulant realizing Fourier multiplication by cosh(xi) on the grid.
class SymOperator {
 public:
  SymOperator(Grid grid, PotentialSpec potential, std::vector<double> dense);

  int size() const { return n_; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const { return data_; }
  const Grid& grid() const { return grid_; }
  const PotentialSpec& potential() const { return potential_; }
  double norm_inf() const { return norm_inf_; }

 private:
  Grid grid_;
  PotentialSpec potential_;
  std::vector<double> data_;
  int n_;
  double norm_inf_;
};

SymOperator assemble(const Grid& grid, const PotentialSpec& spec);

/// Kinetic part alone (W dropped); its spectrum is exactly {cosh(xi_m)}.
SymOperator assemble_kinetic(const Grid& grid);

/// Truncation validity: eigenfunctions at energy lambda_max must live where
/// both cosh(xi) and W(x) stay below margin * lambda_max.
struct ResolutionDiagnostics {
  bool frequency_ok;
  bool domain_ok;
  double frequency_headroom;  // cosh(max xi) / (margin * lambda_max)
  double domain_headroom;     // W(L) / (margin * lambda_max)
  double lambda_max;
  double margin;
  bool ok() const { return frequency_ok && domain_ok; }
};

ResolutionDiagnostics resolution_check(const Grid& grid, const PotentialSpec& spec,
                                       double lambda_max, double margin = 2.0);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // sorted nondecreasing, length N
  Grid grid;
  PotentialSpec potential;

  /// Truncation diagnostics for consuming counts or Riesz means up to
  /// lambda_max on the grid this spectrum came from.
  ResolutionDiagnostics resolution(double lambda_max, double margin = 2.0) const;
};

/// Full spectrum via Householder tridiagonalization followed by implicit-shift
/// QL; deterministic and dependency-free.
SpectrumResult eigenvalues(const SymOperator& op);

/// #{ lambda_j <= lambda } by the inertia of A - lambda I (negative pivots of
/// a symmetrically pivoted LDL^T factorization).  Eigenvalues within
/// 1e-12 ||A|| of lambda count as below.  Falls back to the full spectrum if
/// the factorization breaks down.
int count_below(const SymOperator& op, double lambda);

double riesz_mean(const SpectrumResult& spectrum, double lambda);
double riesz_mean(const std::vector<double>& sorted_eigenvalues, double lambda);
int count_from_sorted(const std::vector<double>& sorted_eigenvalues, double lambda);

// --- dense symmetric kernels, also usable on raw matrices -------------------

/// Eigenvalues of a dense symmetric matrix (row-major, n x n), sorted.
std::vector<double> symmetric_eigenvalues(std::vector<double> dense, int n);

struct EigenSystem {
  std::vector<double> values;   // sorted nondecreasing
  std::vector<double> vectors;  // row-major; column j is the j-th eigenvector
  int n;
};

EigenSystem symmetric_eigensystem(std::vector<double> dense, int n);

/// Count of negative pivots of the shifted matrix; throws numeric_error on
/// factorization breakdown (a pivot too close to zero).
int inertia_below(std::vector<double> dense, int n, double lambda);

}  // namespace fdo
