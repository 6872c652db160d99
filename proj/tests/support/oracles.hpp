#pragma once

// Independent reference computations for tests.  Nothing here may call into
// the code paths under test: the integrator is Romberg (the library uses
// adaptive Simpson), the eigensolver is cyclic Jacobi (the library uses
// Householder + QL), special functions are evaluated from series.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Romberg integration on [a, b] with up to 2^18 panels.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-11) {
  constexpr int kMaxRows = 19;
  double table[kMaxRows][kMaxRows];
  double h = b - a;
  table[0][0] = 0.5 * h * (f(a) + f(b));
  long n = 1;
  for (int i = 1; i < kMaxRows; ++i) {
    h *= 0.5;
    double sum = 0.0;
    for (long k = 0; k < n; ++k) sum += f(a + (2 * k + 1) * h);
    table[i][0] = 0.5 * table[i - 1][0] + h * sum;
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor *= 4.0;
      table[i][j] = table[i][j - 1] +
                    (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
    if (i > 3 &&
        std::abs(table[i][i] - table[i - 1][i - 1]) <=
            tol * (1.0 + std::abs(table[i][i]))) {
      return table[i][i];
    }
    n *= 2;
  }
  return table[kMaxRows - 1][kMaxRows - 1];
}

// Symmetric finite difference with one Richardson step.
inline double derivative(const std::function<double(double)>& f, double x,
                         double h = 1e-4) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

// Cyclic Jacobi rotations; returns the sorted eigenvalues.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(off) < 1e-14) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Digamma by recurrence up to x >= 8 plus the asymptotic series.
inline double digamma(double x) {
  double value = 0.0;
  while (x < 8.0) {
    value -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  value += std::log(x) - 0.5 * inv -
           inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
  return value;
}

// int_0^1 u (1-u)^{c-1} log u du = B(2, c) (digamma(2) - digamma(2 + c)).
inline double beta_log_moment(double c) {
  const double b2c = 1.0 / (c * (c + 1.0));
  return b2c * (digamma(2.0) - digamma(2.0 + c));
}

// Deterministic xorshift generator for reproducible "random" tests.
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed) {}
  double uniform() {  // in (0, 1)
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return (state >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Random dense symmetric matrix with entries in [-1, 1].
inline std::vector<double> random_symmetric(int n, Rng& rng) {
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = rng.uniform(-1.0, 1.0);
      a[static_cast<size_t>(i) * n + j] = v;
      a[static_cast<size_t>(j) * n + i] = v;
    }
  }
  return a;
}

}  // namespace oracle
