#include "proxcg/line_search.hpp"

#include <cmath>

namespace proxcg {

namespace {

double quad_scale(double phi0, double dphi0, double alpha, double phi_alpha) {
  // Minimizer of the quadratic through (0, phi0), (alpha, phi_alpha) with
  // slope dphi0, expressed as a fraction of alpha.
  const double denom = 2.0 * (phi_alpha - phi0 - dphi0 * alpha);
  if (!std::isfinite(denom) || denom == 0.0) return 0.5;
  const double s = -dphi0 * alpha / denom;
  if (!std::isfinite(s)) return 0.5;
  return std::min(0.99, std::max(1e-8, s));
}

}  // namespace

TrialResult trial_scan(const CompositeProblem& problem, const Vector& x, const Vector& d,
                       const Vector& eta, double grad_dot_d, double h_x,
                       const LineSearchConfig& cfg) {
  const double eta_sq = dot(eta, eta);
  TrialResult r;
  for (double t = 1.0; t > cfg.t_bar; t *= cfg.theta) {
    const double h_trial = problem.h.value(add_scaled(x, t, d));
    r.evals += 1;
    if (t * grad_dot_d + h_trial - h_x <= -t * cfg.trial_coeff * eta_sq) {
      r.found = true;
      r.t = t;
      return r;
    }
  }
  return r;
}

StepResult armijo(const CompositeProblem& problem, const Vector& x, const Vector& d,
                  const Vector& eta, double f_x, double grad_dot_d, double alpha_init,
                  const LineSearchConfig& cfg) {
  const double eta_sq = dot(eta, eta);
  double dphi0 = 0.0;
  if (cfg.interpolate) dphi0 = grad_dot_d + problem.h.dir_deriv(x, d);

  StepResult r;
  double alpha = alpha_init;
  for (int i = 0; i <= cfg.backtrack_cap && alpha >= cfg.alpha_floor; ++i) {
    const Vector xc = add_scaled(x, alpha, d);
    const double hc = problem.h.value(xc);
    const double fc = problem.g.value(xc) + hc;
    r.evals += 1;
    if (fc <= f_x - cfg.delta * alpha * eta_sq) {
      r.found = true;
      r.alpha = alpha;
      r.f_next = fc;
      r.h_next = hc;
      return r;
    }
    alpha *= cfg.interpolate ? quad_scale(f_x, dphi0, alpha, fc) : cfg.tau;
  }
  return r;
}

StepResult weakly_convex_search(const CompositeProblem& problem, const Vector& x,
                                const Vector& d, const Vector& eta, double f_x, double h_x,
                                double grad_dot_d, double alpha_init,
                                const LineSearchConfig& cfg) {
  const double eta_sq = dot(eta, eta);
  double dphi0 = 0.0;
  if (cfg.interpolate) dphi0 = grad_dot_d + problem.h.dir_deriv(x, d);

  StepResult r;
  double alpha = alpha_init;
  for (int i = 0; i <= cfg.backtrack_cap && alpha >= cfg.alpha_floor; ++i) {
    const Vector xc = add_scaled(x, alpha, d);
    const double hc = problem.h.value(xc);
    const double fc = problem.g.value(xc) + hc;
    r.evals += 1;
    const bool trial_ok =
        alpha * grad_dot_d + hc - h_x <= -alpha * cfg.trial_coeff * eta_sq;
    const bool armijo_ok = fc <= f_x - cfg.delta * alpha * eta_sq;
    if (trial_ok && armijo_ok) {
      r.found = true;
      r.alpha = alpha;
      r.f_next = fc;
      r.h_next = hc;
      return r;
    }
    alpha *= cfg.interpolate ? quad_scale(f_x, dphi0, alpha, fc) : cfg.tau;
  }
  return r;
}

}  // namespace proxcg
