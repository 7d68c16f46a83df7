// proxcg command-line benchmark driver: single solves, experiment suites,
// and performance profiles, all emitting versioned CSV.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proxcg/bench.hpp"
#include "proxcg/csv.hpp"
#include "proxcg/errors.hpp"
#include "proxcg/suite_config.hpp"

namespace fs = std::filesystem;
using namespace proxcg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

struct FamilyFlags {
  std::string family;
  std::size_t m = 0, n = 0, s = 0;
  double lambda = 0.1;
  double c = 10.0;
  double nu = 0.001;
  double d = 20.0;
  bool sparse = false;
  std::string dataset;
  std::size_t n_features = 0;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags, bool required) {
  auto* family = cmd->add_option("--family", flags.family, "problem family")
                     ->check(CLI::IsMember({"lasso", "mcp", "student-t", "logistic"}));
  if (required) family->required();
  cmd->add_option("--m", flags.m, "sample count (lasso/mcp)");
  cmd->add_option("--n", flags.n, "feature or signal dimension");
  cmd->add_option("--s", flags.s, "true support size (lasso/mcp)");
  cmd->add_option("--lambda", flags.lambda, "regularization weight");
  cmd->add_option("--c", flags.c, "MCP concavity scale");
  cmd->add_option("--nu", flags.nu, "Student's-t tuning parameter");
  cmd->add_option("--d", flags.d, "dynamic range in dB (student-t)");
  cmd->add_flag("--sparse", flags.sparse, "zero half of the entries of A");
  cmd->add_option("--dataset", flags.dataset, "LIBSVM file (logistic)");
  cmd->add_option("--n-features", flags.n_features, "declared feature count (logistic)");
}

ProblemSpec spec_from_flags(const FamilyFlags& f) {
  if (f.family == "lasso") return LassoSpec{f.m, f.n, f.s, f.lambda, f.sparse, 0};
  if (f.family == "mcp") return McpSpec{f.m, f.n, f.s, f.lambda, f.c, f.sparse, 0};
  if (f.family == "student-t") return StudentTSpec{f.n, f.d, f.lambda, f.nu, 0};
  if (f.family == "logistic") {
    if (f.dataset.empty()) throw std::invalid_argument("logistic family requires --dataset");
    return LogisticSpec{f.dataset, f.lambda, f.n_features};
  }
  throw std::invalid_argument("unknown family: " + f.family);
}

struct SolverFlags {
  std::optional<double> tol, mu0, kappa, nu_hat, delta, trial_coeff, theta, t_bar, tau,
      mu_increase_factor;
  std::optional<long> max_iter;
  bool mu_increase = false;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--tol", flags.tol, "relative displacement tolerance");
  cmd->add_option("--max-iter", flags.max_iter, "iteration cap");
  cmd->add_option("--mu0", flags.mu0, "initial step size");
  cmd->add_option("--kappa", flags.kappa, "step backtracking factor");
  cmd->add_option("--nu-hat", flags.nu_hat, "direction safeguard constant");
  cmd->add_option("--delta", flags.delta, "Armijo slope fraction");
  cmd->add_option("--T", flags.trial_coeff, "trial-condition coefficient");
  cmd->add_option("--theta", flags.theta, "trial-step shrink factor");
  cmd->add_option("--t-bar", flags.t_bar, "trial-step switch threshold");
  cmd->add_option("--tau", flags.tau, "Armijo backtracking factor");
  cmd->add_flag("--mu-increase", flags.mu_increase, "grow the step each iteration");
  cmd->add_option("--mu-increase-factor", flags.mu_increase_factor, "step growth divisor");
}

void apply_solver_flags(SolverConfig& cfg, const SolverFlags& f) {
  if (f.tol) cfg.tol = *f.tol;
  if (f.max_iter) cfg.max_iter = *f.max_iter;
  if (f.mu0) cfg.mu0 = *f.mu0;
  if (f.kappa) cfg.kappa = *f.kappa;
  if (f.nu_hat) cfg.nu_hat = *f.nu_hat;
  if (f.delta) cfg.delta = *f.delta;
  if (f.trial_coeff) cfg.trial_coeff = *f.trial_coeff;
  if (f.theta) cfg.theta = *f.theta;
  if (f.t_bar) cfg.t_bar = *f.t_bar;
  if (f.tau) cfg.tau = *f.tau;
  if (f.mu_increase) cfg.mu_increase = true;
  if (f.mu_increase_factor) cfg.mu_increase_factor = *f.mu_increase_factor;
}

int run_solve(const FamilyFlags& family, const SolverFlags& solver_flags,
              const std::string& variant, std::uint64_t seed, const std::string& out_dir) {
  const ProblemSpec spec = spec_from_flags(family);
  SolverConfig config;
  config.variant = variant_from_name(variant);
  apply_solver_flags(config, solver_flags);

  ProblemInstance instance = instantiate(spec, seed);
  SolveReport report = solve(instance.problem, instance.x0, config);

  fs::create_directories(out_dir);
  write_trace_csv((fs::path(out_dir) / "trace.csv").string(), report);

  RunSummary summary{0,
                     seed,
                     config.variant,
                     report.status,
                     report.iterations,
                     report.wall_time_s,
                     report.f,
                     report.eta_norm,
                     report.switch_count,
                     report.switch_ratio()};
  const auto rows = make_run_rows({spec}, {summary});
  write_summary_csv((fs::path(out_dir) / "summary.csv").string(), rows.front());

  std::cerr << "status=" << status_name(report.status) << " iterations=" << report.iterations
            << " f=" << fmt_double(report.f) << " eta_norm=" << fmt_double(report.eta_norm)
            << "\n";
  switch (report.status) {
    case Status::Converged: return kExitOk;
    case Status::MaxIter: return kExitNotConverged;
    case Status::OracleError:
      std::cerr << "oracle error: " << report.error << "\n";
      return kExitUsage;
  }
  return kExitUsage;
}

int run_suite_cmd(const std::string& config_path, const FamilyFlags& family,
                  const SolverFlags& solver_flags, const std::vector<std::string>& variant_names,
                  std::optional<long> repetitions, std::optional<std::uint64_t> seed,
                  std::optional<int> jobs, const std::string& out_dir) {
  SuiteConfigFile suite;
  if (!config_path.empty()) {
    suite = parse_suite_config(config_path);
  } else {
    if (family.family.empty())
      throw std::invalid_argument("suite needs --config or --family flags");
    suite.problems = {spec_from_flags(family)};
    suite.options.variants = {Variant::ProxCg};
  }
  if (!variant_names.empty()) {
    suite.options.variants.clear();
    for (const auto& name : variant_names)
      suite.options.variants.push_back(variant_from_name(name));
  }
  if (repetitions) suite.options.repetitions = static_cast<int>(*repetitions);
  if (seed) suite.options.seed_base = *seed;
  if (jobs) suite.options.jobs = *jobs;
  apply_solver_flags(suite.options.config, solver_flags);

  const SuiteResult result = run_suite(suite.problems, suite.options);

  fs::create_directories(out_dir);
  const auto rows = make_run_rows(suite.problems, result.runs);
  write_runs_csv((fs::path(out_dir) / "runs.csv").string(), rows);
  write_aggregate_csv((fs::path(out_dir) / "aggregate.csv").string(), suite.problems,
                      aggregate(result.runs));

  long converged = 0;
  for (const auto& run : result.runs)
    if (run.status == Status::Converged) ++converged;
  std::cerr << "suite: " << result.runs.size() << " runs, " << converged << " converged\n";
  return converged > 0 ? kExitOk : kExitNotConverged;
}

int run_profile(const std::string& runs_path, const std::string& metric,
                const std::string& out_dir) {
  const auto rows = read_runs_csv(runs_path);
  const CostMatrix costs = cost_matrix_from_rows(rows, metric);
  const ProfileTable table = dolan_more(costs);
  fs::create_directories(out_dir);
  write_profile_csv((fs::path(out_dir) / "profile.csv").string(), table);
  std::cerr << "profile: " << table.solvers.size() << " solvers, " << table.taus.size()
            << " breakpoints\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proxcg: composite-minimization solvers and benchmark harness"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "run one solver on one instance");
  FamilyFlags solve_family;
  SolverFlags solve_solver;
  std::string solve_variant = "alg31";
  std::uint64_t solve_seed = 1;
  std::string solve_out = ".";
  add_family_flags(solve_cmd, solve_family, /*required=*/true);
  add_solver_flags(solve_cmd, solve_solver);
  solve_cmd->add_option("--variant", solve_variant, "solver variant")
      ->check(CLI::IsMember({"alg31", "alg31-interp", "alg41", "alg41-interp", "pgm", "apg"}));
  solve_cmd->add_option("--seed", solve_seed, "instance seed");
  solve_cmd->add_option("--out", solve_out, "output directory");

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run a suite of (instance, solver) cells");
  FamilyFlags suite_family;
  SolverFlags suite_solver;
  std::string suite_config_path;
  std::vector<std::string> suite_variants;
  std::optional<long> suite_repetitions;
  std::optional<std::uint64_t> suite_seed;
  std::optional<int> suite_jobs;
  std::string suite_out = ".";
  suite_cmd->add_option("--config", suite_config_path, "suite config file");
  add_family_flags(suite_cmd, suite_family, /*required=*/false);
  add_solver_flags(suite_cmd, suite_solver);
  suite_cmd->add_option("--variants", suite_variants, "solver variants")->delimiter(',');
  suite_cmd->add_option("--repetitions", suite_repetitions, "seeded repetitions per spec");
  suite_cmd->add_option("--seed", suite_seed, "seed base");
  suite_cmd->add_option("--jobs", suite_jobs, "parallel workers (default 1)");
  suite_cmd->add_option("--out", suite_out, "output directory");

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "performance profile from a suite runs.csv");
  std::string profile_runs;
  std::string profile_metric = "time";
  std::string profile_out = ".";
  profile_cmd->add_option("--runs", profile_runs, "runs.csv path")->required();
  profile_cmd->add_option("--metric", profile_metric, "cost metric")
      ->check(CLI::IsMember({"time", "iterations"}));
  profile_cmd->add_option("--out", profile_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(solve_family, solve_solver, solve_variant, solve_seed, solve_out);
    if (suite_cmd->parsed())
      return run_suite_cmd(suite_config_path, suite_family, suite_solver, suite_variants,
                           suite_repetitions, suite_seed, suite_jobs, suite_out);
    if (profile_cmd->parsed()) return run_profile(profile_runs, profile_metric, profile_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
