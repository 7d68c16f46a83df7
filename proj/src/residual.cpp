#include "proxcg/residual.hpp"

#include <cmath>
#include <stdexcept>

#include "proxcg/errors.hpp"

namespace proxcg {

namespace {

void check_mu(double mu, double rho) {
  if (!(mu > 0.0)) throw std::invalid_argument("fbr: step must be positive");
  if (rho > 0.0 && !(mu < 1.0 / rho))
    throw std::invalid_argument("fbr: weakly convex h requires mu < 1/rho");
}

}  // namespace

FbrResult fbr(const CompositeProblem& problem, const Vector& x, double mu) {
  check_mu(mu, problem.rho());
  FbrResult r;
  r.mu = mu;
  r.g_x = problem.g.value(x);
  r.grad_x = problem.g.grad(x);
  r.g_value_evals = 1;

  Vector forward = add_scaled(x, -mu, r.grad_x);
  r.x_plus = problem.h.prox(forward, mu);
  r.prox_evals = 1;
  r.g_plus = problem.g.value(r.x_plus);
  r.g_value_evals += 1;

  r.eta.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r.eta[i] = (x[i] - r.x_plus[i]) / mu;
  return r;
}

FbrResult backtrack_mu(const CompositeProblem& problem, const Vector& x, double mu_prev,
                       double kappa, int max_halvings) {
  check_mu(mu_prev, problem.rho());
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::invalid_argument("backtrack_mu: kappa must lie in (0,1)");

  FbrResult r;
  r.g_x = problem.g.value(x);
  r.grad_x = problem.g.grad(x);
  r.g_value_evals = 1;
  if (!std::isfinite(r.g_x)) throw OracleError("backtrack_mu: g(x) is not finite");

  double mu = mu_prev;
  for (int attempt = 0; attempt <= max_halvings; ++attempt, mu *= kappa) {
    Vector forward = add_scaled(x, -mu, r.grad_x);
    Vector x_plus = problem.h.prox(forward, mu);
    r.prox_evals += 1;
    const double g_plus = problem.g.value(x_plus);
    r.g_value_evals += 1;

    double lin = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x_plus[i] - x[i];
      lin += r.grad_x[i] * d;
      sq += d * d;
    }
    // The rounding cushion matters near stationary points, where the true
    // margin sq/(2 mu) sinks below the evaluation noise of g; without it the
    // condition fails spuriously and mu collapses.
    const double cushion = 1e-12 * (1.0 + std::abs(r.g_x));
    if (std::isfinite(g_plus) && g_plus <= r.g_x + lin + sq / (2.0 * mu) + cushion) {
      r.mu = mu;
      r.g_plus = g_plus;
      r.x_plus = std::move(x_plus);
      r.eta.resize(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r.eta[i] = (x[i] - r.x_plus[i]) / mu;
      return r;
    }
  }
  throw OracleError("backtrack_mu: decrease condition unsatisfied after " +
                    std::to_string(max_halvings) + " halvings; smooth oracle looks inconsistent");
}

double increase_mu(double mu, double factor, double rho) {
  if (!(factor > 0.0 && factor < 1.0))
    throw std::invalid_argument("increase_mu: factor must lie in (0,1)");
  double next = mu / factor;
  if (rho > 0.0) {
    const double cap = (1.0 / rho) * (1.0 - 1e-6);
    if (next > cap) next = cap;
  }
  return next;
}

}  // namespace proxcg
