#pragma once

// Test-only reference oracles, kept independent of the library's closed forms.

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "proxcg/linalg.hpp"

namespace proxcg::testing {

// 1-D penalties evaluated directly from their definitions.
inline double l1_penalty(double x, double lambda) { return lambda * std::abs(x); }

inline double mcp_penalty(double x, double lambda, double c) {
  const double a = std::abs(x);
  if (a <= c * lambda) return lambda * a - x * x / (2.0 * c);
  return 0.5 * c * lambda * lambda;
}

/// Brute-force 1-D prox: minimizes penalty(u) + (u - v)^2 / (2 mu) over a grid
/// spanning [-3|v|-1, 3|v|+1] with the given step.
inline double grid_prox(const std::function<double(double)>& penalty, double v, double mu,
                        double grid_step = 1e-5) {
  const double lo = -3.0 * std::abs(v) - 1.0;
  const double hi = 3.0 * std::abs(v) + 1.0;
  double best_u = lo;
  double best_val = penalty(lo) + (lo - v) * (lo - v) / (2.0 * mu);
  const long steps = static_cast<long>((hi - lo) / grid_step);
  for (long i = 1; i <= steps; ++i) {
    const double u = lo + static_cast<double>(i) * grid_step;
    const double val = penalty(u) + (u - v) * (u - v) / (2.0 * mu);
    if (val < best_val) {
      best_val = val;
      best_u = u;
    }
  }
  return best_u;
}

/// Central finite-difference gradient with step 1e-6 (1 + ||x||).
inline Vector finite_difference_gradient(const std::function<double(const Vector&)>& f,
                                         const Vector& x) {
  const double h = 1e-6 * (1.0 + norm(x));
  Vector g(x.size());
  Vector probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double fp = f(probe);
    probe[i] = x[i] - h;
    const double fm = f(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

/// Cholesky factorization of a symmetric positive definite matrix (row-major);
/// returns nothing if a pivot drops below the tolerance, i.e. the matrix is
/// numerically rank deficient.
inline std::optional<std::vector<double>> cholesky(std::vector<double> a, std::size_t n,
                                                   double tol = 1e-10) {
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
    if (!(diag > tol)) return std::nullopt;
    const double root = std::sqrt(diag);
    a[j * n + j] = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = v / root;
    }
  }
  return a;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace proxcg::testing
