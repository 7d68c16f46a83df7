#pragma once

#include "proxcg/oracles.hpp"

namespace proxcg {

/// Forward-backward residual at x for step mu:
///   x_plus = prox_{mu h}(x - mu grad g(x)),   eta = -(x_plus - x) / mu.
/// eta vanishes exactly at stationary points and stands in for the gradient
/// in the conjugate-gradient recursion; when h = 0, eta equals grad g(x).
struct FbrResult {
  Vector x_plus;
  Vector eta;
  double mu = 0.0;   // step actually used
  double g_x = 0.0;  // g(x)
  Vector grad_x;     // grad g(x)
  double g_plus = 0.0;  // g(x_plus)
  long g_value_evals = 0;
  long prox_evals = 0;
};

FbrResult fbr(const CompositeProblem& problem, const Vector& x, double mu);

/// Largest mu in {mu_prev, mu_prev*kappa, mu_prev*kappa^2, ...} for which
///   g(x_plus) <= g(x) + grad g(x)^T (x_plus - x) + ||x_plus - x||^2 / (2 mu).
/// The condition holds once 1/mu exceeds the gradient Lipschitz constant, so
/// exceeding the halving cap signals an inconsistent oracle.
FbrResult backtrack_mu(const CompositeProblem& problem, const Vector& x, double mu_prev,
                       double kappa, int max_halvings = 64);

/// mu / factor, clamped below 1/rho when the nonsmooth term is weakly convex.
double increase_mu(double mu, double factor, double rho = 0.0);

}  // namespace proxcg
