#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "proxcg/problems.hpp"
#include "proxcg/solver.hpp"

namespace proxcg {

/// l1-regularized logistic regression read from a LIBSVM file. The data are
/// fixed, so repetition seeds only label the runs.
struct LogisticSpec {
  std::string dataset_path;
  double lambda = 0.1;
  std::size_t n_override = 0;
};

using ProblemSpec = std::variant<LassoSpec, StudentTSpec, McpSpec, LogisticSpec>;

const char* family_name(const ProblemSpec& spec);

/// Instantiated problem plus the benchmark's initial point for it (zeros,
/// except the Student's-t family which starts uniform in [-10, 10]).
struct ProblemInstance {
  CompositeProblem problem;
  Vector x0;
};
ProblemInstance instantiate(const ProblemSpec& spec, std::uint64_t seed);

/// Cost of solver s on problem p; NaN marks a run that did not converge.
class CostMatrix {
 public:
  CostMatrix(std::vector<std::string> solvers, std::size_t n_problems);

  std::size_t num_solvers() const { return solvers_.size(); }
  std::size_t num_problems() const { return n_problems_; }
  const std::vector<std::string>& solvers() const { return solvers_; }
  double& at(std::size_t problem, std::size_t solver);
  double at(std::size_t problem, std::size_t solver) const;

 private:
  std::vector<std::string> solvers_;
  std::size_t n_problems_;
  std::vector<double> costs_;
};

/// Performance profile: for each solver the step function P(tau) sampled at
/// every distinct cost ratio plus one point past the largest ratio, where the
/// curve has reached its plateau (the fraction of converged problems).
struct ProfileTable {
  std::vector<std::string> solvers;
  std::vector<double> taus;
  std::vector<std::vector<double>> p;  // p[solver][tau index]

  double value(std::size_t solver, double tau) const;
};

ProfileTable dolan_more(const CostMatrix& costs);

struct RunSummary {
  std::size_t spec_index = 0;
  std::uint64_t seed = 0;
  Variant variant = Variant::ProxCg;
  Status status = Status::MaxIter;
  long iterations = 0;
  double wall_time_s = 0.0;
  double final_f = 0.0;
  double final_eta_norm = 0.0;
  long switches = 0;
  double switch_ratio = 0.0;
};

struct SuiteOptions {
  std::vector<Variant> variants;
  int repetitions = 1;
  std::uint64_t seed_base = 1;
  SolverConfig config;  // variant field is overridden per cell
  int jobs = 1;
};

struct SuiteResult {
  std::vector<RunSummary> runs;   // ordered by (spec, seed, variant)
  CostMatrix time_costs;          // problems = spec x repetition cells
  CostMatrix iteration_costs;
};

/// Run every (spec, repetition, variant) cell. Instance seeds are
/// seed_base + repetition; generation happens outside the timed region.
SuiteResult run_suite(const std::vector<ProblemSpec>& specs, const SuiteOptions& options);

struct AggregateRow {
  std::size_t spec_index = 0;
  Variant variant = Variant::ProxCg;
  long runs = 0;
  long converged = 0;
  double mean_iterations = 0.0;
  double mean_time_s = 0.0;
  double mean_switches = 0.0;
  double mean_switch_ratio = 0.0;
  double mean_final_f = 0.0;
};

/// Per (spec, variant) means over repetitions, in suite order.
std::vector<AggregateRow> aggregate(const std::vector<RunSummary>& runs);

/// max_k e_k sqrt(k+1) with e_k = min_{i<=k} ||x_i - x_ref||; the sequence is
/// bounded for runs matching the strongly convex rate guarantee.
double rate_envelope(const std::vector<Vector>& iterates, const Vector& x_ref);

}  // namespace proxcg
