#pragma once

#include "proxcg/oracles.hpp"

namespace proxcg {

struct LineSearchConfig {
  double delta = 1e-4;        // Armijo slope fraction, in (0,1)
  double trial_coeff = 1e-3;  // T in the trial-step condition, T > delta
  double theta = 0.5;         // trial-step shrink factor
  double t_bar = 1.0 / (1 << 20);  // trial-step threshold
  double tau = 0.5;           // Armijo backtracking factor
  bool interpolate = false;   // quadratic-interpolation scaling instead of fixed tau
  double alpha_floor = 1.0 / (1 << 30);
  int backtrack_cap = 60;
};

struct TrialResult {
  bool found = false;
  double t = 0.0;
  int evals = 0;  // h evaluations spent scanning, reported even on exhaustion

  explicit operator bool() const { return found; }
};

struct StepResult {
  bool found = false;
  double alpha = 0.0;
  double f_next = 0.0;  // f(x + alpha d), reusable by the caller
  double h_next = 0.0;  // h(x + alpha d)
  int evals = 0;        // candidates tried; one g and one h evaluation each

  explicit operator bool() const { return found; }
};

/// Largest t in {1, theta, theta^2, ...} with t > t_bar satisfying
///   t grad_dot_d + h(x + t d) - h(x) <= -t T ||eta||^2.
/// Absence of such t is a valid outcome and signals a prox-switch.
TrialResult trial_scan(const CompositeProblem& problem, const Vector& x, const Vector& d,
                       const Vector& eta, double grad_dot_d, double h_x,
                       const LineSearchConfig& cfg);

/// Backtracking from alpha_init until f(x + alpha d) <= f(x) - delta alpha ||eta||^2.
/// Plain mode scales by tau; interpolation mode scales by the quadratic-fit
/// factor clamped to [1e-8, 0.99]. Fails once alpha drops below the floor or
/// the cap is exhausted.
StepResult armijo(const CompositeProblem& problem, const Vector& x, const Vector& d,
                  const Vector& eta, double f_x, double grad_dot_d, double alpha_init,
                  const LineSearchConfig& cfg);

/// Weakly convex variant: each candidate must satisfy the Armijo condition
/// and the trial condition at t = alpha, since scaling down a step no longer
/// preserves the trial inequality when h is only weakly convex.
StepResult weakly_convex_search(const CompositeProblem& problem, const Vector& x,
                                const Vector& d, const Vector& eta, double f_x, double h_x,
                                double grad_dot_d, double alpha_init,
                                const LineSearchConfig& cfg);

}  // namespace proxcg
