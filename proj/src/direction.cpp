#include "proxcg/direction.hpp"

#include <cmath>
#include <stdexcept>

namespace proxcg {

double select_nu(const Vector& s_prev, const Vector& y_prev, double nu_hat) {
  if (!(nu_hat > 0.0)) throw std::invalid_argument("select_nu: nu_hat must be positive");
  const double ss = dot(s_prev, s_prev);
  if (ss == 0.0) throw std::invalid_argument("select_nu: s_prev must be nonzero");
  const double sy = dot(s_prev, y_prev);
  if (sy >= nu_hat * ss) return 0.0;
  return std::max(0.0, -sy / ss) + nu_hat;
}

DirectionResult compute_direction(const Vector& eta, const Vector& eta_prev,
                                  const Vector& d_prev, const Vector& s_prev, double nu_hat) {
  DirectionResult out;
  Vector y = subtract(eta, eta_prev);
  out.nu = select_nu(s_prev, y, nu_hat);

  // denom = d_prev^T z with z = y + nu s
  const double denom = dot(d_prev, y) + out.nu * dot(d_prev, s_prev);
  if (std::abs(denom) < 1e-300) {
    out.fallback = true;
    out.d = scaled(eta, -1.0);
    return out;
  }
  out.beta = dot(eta, y) / denom;
  out.gamma = dot(eta, d_prev) / denom;

  out.d.resize(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i)
    out.d[i] = -eta[i] + out.beta * d_prev[i] - out.gamma * y[i];
  return out;
}

}  // namespace proxcg
