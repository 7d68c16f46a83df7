#pragma once

#include "proxcg/linalg.hpp"

namespace proxcg {

/// Safeguard weight nu_k for z = y + nu_k * s. Returns 0 when s^T y is already
/// at least nu_hat ||s||^2, otherwise max{0, -s^T y / s^T s} + nu_hat, which
/// guarantees s^T z >= nu_hat ||s||^2. s must be nonzero.
double select_nu(const Vector& s_prev, const Vector& y_prev, double nu_hat);

struct DirectionResult {
  Vector d;
  double beta = 0.0;
  double gamma = 0.0;
  double nu = 0.0;
  /// True when the recursion denominator underflowed and d fell back to -eta.
  bool fallback = false;
};

/// Three-term HS direction on the forward-backward residual:
///   y = eta - eta_prev,  z = y + nu s_prev,
///   beta = eta^T y / (d_prev^T z),  gamma = eta^T d_prev / (d_prev^T z),
///   d = -eta + beta d_prev - gamma y.
/// The construction cancels the cross terms, so eta^T d = -||eta||^2 holds
/// regardless of the line search. First iterations (no history) are the
/// caller's job: d0 = -eta.
DirectionResult compute_direction(const Vector& eta, const Vector& eta_prev,
                                  const Vector& d_prev, const Vector& s_prev, double nu_hat);

}  // namespace proxcg
