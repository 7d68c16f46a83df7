#pragma once

#include <functional>
#include <string>
#include <vector>

#include "proxcg/line_search.hpp"
#include "proxcg/oracles.hpp"

namespace proxcg {

enum class Variant {
  ProxCg,             // CG on the forward-backward residual, convex h
  ProxCgInterp,       // same with quadratic-interpolation line search
  ProxCgWeakly,       // weakly convex h: both line-search conditions enforced
  ProxCgWeaklyInterp,
  Pgm,                // proximal gradient baseline
  Apg,                // accelerated proximal gradient baseline (convex h only)
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct SolverConfig {
  double mu0 = 1.0;    // initial step, mu_{-1}
  double kappa = 0.5;  // step backtracking factor
  double nu_hat = 1e-8;
  double delta = 1e-4;
  double trial_coeff = 1e-3;  // T
  double theta = 0.5;
  double t_bar = 1.0 / (1 << 20);
  double tau = 0.5;
  double tol = 1e-8;
  long max_iter = 50000;
  Variant variant = Variant::ProxCg;
  bool mu_increase = false;        // grow mu each iteration before backtracking
  double mu_increase_factor = 0.9;
  double alpha_floor = 1.0 / (1 << 30);
  int backtrack_cap = 60;
  int mu_backtrack_cap = 64;

  LineSearchConfig line_search_config() const;
  void validate() const;
};

enum class Status { Converged, MaxIter, OracleError };
const char* status_name(Status s);

enum class StepKind { CgStep, ProxSwitch, PgmStep, ApgStep, ApgRestart };
const char* step_kind_name(StepKind k);

struct TraceRow {
  long k = 0;
  double f = 0.0;        // objective after the step
  double eta_norm = 0.0; // residual norm at the pre-step point
  double mu = 0.0;
  double alpha = 0.0;    // 0 for non-CG steps
  StepKind kind = StepKind::CgStep;
  long g_evals = 0;  // g value evaluations spent this iteration
  long h_evals = 0;
  long prox_evals = 0;
};

/// Per-iteration snapshot handed to an observer; references are only valid
/// during the callback.
struct IterationEvent {
  long k;
  const Vector& x;       // pre-step iterate
  const Vector& x_next;  // accepted iterate
  const Vector& x_plus;  // forward-backward point at x
  const Vector& eta;
  const Vector& d;
  double mu;
  double alpha;
  double f_next;
  StepKind kind;
};
using IterationObserver = std::function<void(const IterationEvent&)>;

struct SolveReport {
  Status status = Status::MaxIter;
  long iterations = 0;
  long switch_count = 0;  // prox-switch steps taken
  std::vector<TraceRow> trace;
  Vector x;                // final iterate
  double f = 0.0;          // f at the final iterate
  double eta_norm = 0.0;   // residual norm at the final iterate
  double initial_f = 0.0;
  double max_direction_ratio = 0.0;  // max ||d_k|| / ||eta_k|| observed
  double wall_time_s = 0.0;
  std::string error;  // populated for Status::OracleError

  double switch_ratio() const {
    return iterations > 0 ? static_cast<double>(switch_count) / static_cast<double>(iterations)
                          : 0.0;
  }
};

/// Run the variant selected in the config. ProxCg* variants implement the
/// residual-based CG iteration with prox-switch fallback; Pgm and Apg are the
/// baselines. Stops when ||x_plus - x|| / max(1, ||x||) (CG variants) or
/// ||x_{k+1} - x_k|| / max(1, ||x_k||) (baselines) falls to the tolerance.
SolveReport solve(const CompositeProblem& problem, const Vector& x0, const SolverConfig& config,
                  const IterationObserver& observer = {});

SolveReport solve_pgm(const CompositeProblem& problem, const Vector& x0,
                      const SolverConfig& config, const IterationObserver& observer = {});

/// FISTA-style momentum with restart on objective increase. Convex h only.
SolveReport solve_apg(const CompositeProblem& problem, const Vector& x0,
                      const SolverConfig& config, const IterationObserver& observer = {});

}  // namespace proxcg
