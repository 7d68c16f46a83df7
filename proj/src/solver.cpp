#include "proxcg/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "proxcg/direction.hpp"
#include "proxcg/errors.hpp"
#include "proxcg/residual.hpp"

namespace proxcg {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::ProxCg: return "alg31";
    case Variant::ProxCgInterp: return "alg31-interp";
    case Variant::ProxCgWeakly: return "alg41";
    case Variant::ProxCgWeaklyInterp: return "alg41-interp";
    case Variant::Pgm: return "pgm";
    case Variant::Apg: return "apg";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  for (Variant v : {Variant::ProxCg, Variant::ProxCgInterp, Variant::ProxCgWeakly,
                    Variant::ProxCgWeaklyInterp, Variant::Pgm, Variant::Apg})
    if (name == variant_name(v)) return v;
  throw std::invalid_argument("unknown solver variant: " + name);
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Converged: return "converged";
    case Status::MaxIter: return "max-iter";
    case Status::OracleError: return "oracle-error";
  }
  return "?";
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::CgStep: return "cg-step";
    case StepKind::ProxSwitch: return "prox-switch";
    case StepKind::PgmStep: return "pgm-step";
    case StepKind::ApgStep: return "apg-step";
    case StepKind::ApgRestart: return "apg-restart";
  }
  return "?";
}

LineSearchConfig SolverConfig::line_search_config() const {
  LineSearchConfig ls;
  ls.delta = delta;
  ls.trial_coeff = trial_coeff;
  ls.theta = theta;
  ls.t_bar = t_bar;
  ls.tau = tau;
  ls.interpolate = variant == Variant::ProxCgInterp || variant == Variant::ProxCgWeaklyInterp;
  ls.alpha_floor = alpha_floor;
  ls.backtrack_cap = backtrack_cap;
  return ls;
}

void SolverConfig::validate() const {
  if (!(mu0 > 0.0)) throw std::invalid_argument("config: mu0 must be positive");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("config: kappa must lie in (0,1)");
  if (!(nu_hat > 0.0)) throw std::invalid_argument("config: nu_hat must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("config: delta must lie in (0,1)");
  if (!(trial_coeff > delta)) throw std::invalid_argument("config: T must exceed delta");
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("config: theta must lie in (0,1)");
  if (!(t_bar > 0.0 && t_bar < 1.0)) throw std::invalid_argument("config: t_bar must lie in (0,1)");
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("config: tau must lie in (0,1)");
  if (!(tol >= 0.0)) throw std::invalid_argument("config: tol must be nonnegative");
  if (max_iter < 0) throw std::invalid_argument("config: max_iter must be nonnegative");
  if (!(mu_increase_factor > 0.0 && mu_increase_factor < 1.0))
    throw std::invalid_argument("config: mu_increase_factor must lie in (0,1)");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Initial step honoring mu < 1/rho for weakly convex h.
double clamp_mu0(double mu0, double rho) {
  if (rho > 0.0 && !(mu0 < 1.0 / rho)) return 0.99 / rho;
  return mu0;
}

double relative_displacement(const Vector& from, const Vector& to) {
  double diff = 0.0, base = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const double d = to[i] - from[i];
    diff += d * d;
    base += from[i] * from[i];
  }
  return std::sqrt(diff) / std::max(1.0, std::sqrt(base));
}

SolveReport run_prox_cg(const CompositeProblem& problem, const Vector& x0,
                        const SolverConfig& config, const IterationObserver& observer) {
  const auto start = Clock::now();
  const bool weakly = config.variant == Variant::ProxCgWeakly ||
                      config.variant == Variant::ProxCgWeaklyInterp;
  const LineSearchConfig ls = config.line_search_config();
  const double rho = problem.rho();

  SolveReport report;
  Vector x = x0;
  double h_x = problem.h.value(x);
  double mu_prev = clamp_mu0(config.mu0, rho);

  Vector eta_prev, d_prev, s_prev;
  report.initial_f = 0.0;
  bool have_history = false;

  try {
    for (long k = 0; k < config.max_iter + 1; ++k) {
      if (config.mu_increase && k > 0) mu_prev = increase_mu(mu_prev, config.mu_increase_factor, rho);

      FbrResult fr = backtrack_mu(problem, x, mu_prev, config.kappa, config.mu_backtrack_cap);
      long g_evals = fr.g_value_evals;
      long h_evals = (k == 0) ? 1 : 0;  // h(x) is carried over after the first iteration
      long prox_evals = fr.prox_evals;

      const double f_x = fr.g_x + h_x;
      if (k == 0) report.initial_f = f_x;
      if (!std::isfinite(f_x)) throw OracleError("solve: objective is not finite");

      const double eta_norm = norm(fr.eta);
      const bool converged = relative_displacement(x, fr.x_plus) <= config.tol;
      if (converged || k == config.max_iter) {
        report.status = converged ? Status::Converged : Status::MaxIter;
        report.iterations = k;
        report.x = std::move(x);
        report.f = f_x;
        report.eta_norm = eta_norm;
        report.wall_time_s = seconds_since(start);
        return report;
      }

      Vector d;
      if (!have_history || dot(s_prev, s_prev) == 0.0) {
        d = scaled(fr.eta, -1.0);
      } else {
        d = compute_direction(fr.eta, eta_prev, d_prev, s_prev, config.nu_hat).d;
      }
      if (eta_norm > 0.0)
        report.max_direction_ratio = std::max(report.max_direction_ratio, norm(d) / eta_norm);

      const double grad_dot_d = dot(fr.grad_x, d);
      StepKind kind = StepKind::ProxSwitch;
      double alpha = 0.0;
      double f_next, h_next;
      Vector x_next;

      const TrialResult trial = trial_scan(problem, x, d, fr.eta, grad_dot_d, h_x, ls);
      h_evals += trial.evals;
      if (trial) {
        const StepResult step =
            weakly ? weakly_convex_search(problem, x, d, fr.eta, f_x, h_x, grad_dot_d, trial.t,
                                          ls)
                   : armijo(problem, x, d, fr.eta, f_x, grad_dot_d, trial.t, ls);
        g_evals += step.evals;
        h_evals += step.evals;
        if (step) {
          kind = StepKind::CgStep;
          alpha = step.alpha;
          x_next = add_scaled(x, alpha, d);
          f_next = step.f_next;
          h_next = step.h_next;
        }
      }
      if (kind == StepKind::ProxSwitch) {
        x_next = fr.x_plus;
        h_next = problem.h.value(x_next);
        h_evals += 1;
        f_next = fr.g_plus + h_next;
        d = scaled(fr.eta, -1.0);  // bookkeeping: the step taken is -mu eta
        report.switch_count += 1;
      }
      if (!std::isfinite(f_next)) throw OracleError("solve: objective is not finite");

      report.trace.push_back(
          {k, f_next, eta_norm, fr.mu, alpha, kind, g_evals, h_evals, prox_evals});
      if (observer)
        observer(IterationEvent{k, x, x_next, fr.x_plus, fr.eta, d, fr.mu, alpha, f_next, kind});

      s_prev = subtract(x_next, x);
      d_prev = std::move(d);
      eta_prev = std::move(fr.eta);
      have_history = true;
      x = std::move(x_next);
      h_x = h_next;
      mu_prev = fr.mu;
    }
  } catch (const OracleError& e) {
    report.status = Status::OracleError;
    report.error = e.what();
    report.iterations = static_cast<long>(report.trace.size());
    report.x = std::move(x);
    report.f = std::numeric_limits<double>::quiet_NaN();
    report.eta_norm = std::numeric_limits<double>::quiet_NaN();
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

}  // namespace

SolveReport solve_pgm(const CompositeProblem& problem, const Vector& x0,
                      const SolverConfig& config, const IterationObserver& observer) {
  config.validate();
  const auto start = Clock::now();
  const double rho = problem.rho();

  SolveReport report;
  Vector x = x0;
  double h_x = problem.h.value(x);
  double mu_prev = clamp_mu0(config.mu0, rho);

  try {
    for (long k = 0; k < config.max_iter + 1; ++k) {
      if (config.mu_increase && k > 0) mu_prev = increase_mu(mu_prev, config.mu_increase_factor, rho);

      FbrResult fr = backtrack_mu(problem, x, mu_prev, config.kappa, config.mu_backtrack_cap);
      const double f_x = fr.g_x + h_x;
      if (k == 0) report.initial_f = f_x;
      if (!std::isfinite(f_x)) throw OracleError("solve_pgm: objective is not finite");

      const double eta_norm = norm(fr.eta);
      const bool converged = relative_displacement(x, fr.x_plus) <= config.tol;
      if (converged || k == config.max_iter) {
        report.status = converged ? Status::Converged : Status::MaxIter;
        report.iterations = k;
        report.x = std::move(x);
        report.f = f_x;
        report.eta_norm = eta_norm;
        report.wall_time_s = seconds_since(start);
        return report;
      }

      Vector x_next = fr.x_plus;
      const double h_next = problem.h.value(x_next);
      const double f_next = fr.g_plus + h_next;
      if (!std::isfinite(f_next)) throw OracleError("solve_pgm: objective is not finite");

      report.trace.push_back({k, f_next, eta_norm, fr.mu, 0.0, StepKind::PgmStep,
                              fr.g_value_evals, (k == 0) ? 2L : 1L, fr.prox_evals});
      if (observer)
        observer(IterationEvent{k, x, x_next, fr.x_plus, fr.eta, fr.eta, fr.mu, 0.0, f_next,
                                StepKind::PgmStep});

      x = std::move(x_next);
      h_x = h_next;
      mu_prev = fr.mu;
    }
  } catch (const OracleError& e) {
    report.status = Status::OracleError;
    report.error = e.what();
    report.iterations = static_cast<long>(report.trace.size());
    report.x = std::move(x);
    report.f = std::numeric_limits<double>::quiet_NaN();
    report.eta_norm = std::numeric_limits<double>::quiet_NaN();
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

SolveReport solve_apg(const CompositeProblem& problem, const Vector& x0,
                      const SolverConfig& config, const IterationObserver& observer) {
  config.validate();
  if (problem.rho() > 0.0)
    throw std::invalid_argument("solve_apg: weakly convex nonsmooth terms are not supported");
  const auto start = Clock::now();

  SolveReport report;
  Vector x = x0;
  Vector x_prev = x0;
  double h_x = problem.h.value(x);
  double f_x = problem.g.value(x) + h_x;
  report.initial_f = f_x;
  double mu_prev = config.mu0;
  double t_momentum = 1.0;

  try {
    if (!std::isfinite(f_x)) throw OracleError("solve_apg: objective is not finite");
    for (long k = 0; k < config.max_iter; ++k) {
      if (config.mu_increase && k > 0)
        mu_prev = increase_mu(mu_prev, config.mu_increase_factor, 0.0);

      const double momentum = (t_momentum - 1.0);
      const double t_next_momentum = (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum)) / 2.0;
      Vector y(x.size());
      const double w = momentum / t_next_momentum;
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + w * (x[i] - x_prev[i]);

      FbrResult fr = backtrack_mu(problem, y, mu_prev, config.kappa, config.mu_backtrack_cap);
      double h_next = problem.h.value(fr.x_plus);
      double f_next = fr.g_plus + h_next;
      StepKind kind = StepKind::ApgStep;
      long g_evals = fr.g_value_evals + (k == 0 ? 1 : 0);  // first row covers f(x0)
      long h_evals = 1 + (k == 0 ? 1 : 0);
      long prox_evals = fr.prox_evals;

      if (f_next > f_x) {
        // momentum overshot: restart from the current iterate with a plain step
        fr = backtrack_mu(problem, x, fr.mu, config.kappa, config.mu_backtrack_cap);
        h_next = problem.h.value(fr.x_plus);
        f_next = fr.g_plus + h_next;
        g_evals += fr.g_value_evals;
        h_evals += 1;
        prox_evals += fr.prox_evals;
        t_momentum = 1.0;
        kind = StepKind::ApgRestart;
      } else {
        t_momentum = t_next_momentum;
      }
      if (!std::isfinite(f_next)) throw OracleError("solve_apg: objective is not finite");

      const double eta_norm = norm(fr.eta);
      const double rel = relative_displacement(x, fr.x_plus);

      report.trace.push_back(
          {k, f_next, eta_norm, fr.mu, 0.0, kind, g_evals, h_evals, prox_evals});
      if (observer)
        observer(IterationEvent{k, x, fr.x_plus, fr.x_plus, fr.eta, fr.eta, fr.mu, 0.0, f_next,
                                kind});

      x_prev = std::move(x);
      x = std::move(fr.x_plus);
      h_x = h_next;
      f_x = f_next;
      mu_prev = fr.mu;

      if (rel <= config.tol) {
        FbrResult certificate = fbr(problem, x, mu_prev);
        report.status = Status::Converged;
        report.iterations = k + 1;
        report.f = f_x;
        report.eta_norm = norm(certificate.eta);
        report.x = std::move(x);
        report.wall_time_s = seconds_since(start);
        return report;
      }
    }

    FbrResult certificate = fbr(problem, x, mu_prev);
    report.status = Status::MaxIter;
    report.iterations = config.max_iter;
    report.f = f_x;
    report.eta_norm = norm(certificate.eta);
    report.x = std::move(x);
  } catch (const OracleError& e) {
    report.status = Status::OracleError;
    report.error = e.what();
    report.iterations = static_cast<long>(report.trace.size());
    report.x = std::move(x);
    report.f = std::numeric_limits<double>::quiet_NaN();
    report.eta_norm = std::numeric_limits<double>::quiet_NaN();
  }
  report.wall_time_s = seconds_since(start);
  return report;
}

SolveReport solve(const CompositeProblem& problem, const Vector& x0, const SolverConfig& config,
                  const IterationObserver& observer) {
  config.validate();
  if (x0.size() != problem.dim()) throw std::invalid_argument("solve: x0 dimension mismatch");
  switch (config.variant) {
    case Variant::Pgm: return solve_pgm(problem, x0, config, observer);
    case Variant::Apg: return solve_apg(problem, x0, config, observer);
    default: return run_prox_cg(problem, x0, config, observer);
  }
}

}  // namespace proxcg
