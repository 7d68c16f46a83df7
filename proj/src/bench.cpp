#include "proxcg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <mutex>
#include <thread>

#include "proxcg/libsvm.hpp"
#include "proxcg/rng.hpp"

namespace proxcg {

namespace {
constexpr double kDnf = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kX0SeedSalt = 0x9E3779B97F4A7C15ULL;
}  // namespace

const char* family_name(const ProblemSpec& spec) {
  struct Visitor {
    const char* operator()(const LassoSpec&) const { return "lasso"; }
    const char* operator()(const StudentTSpec&) const { return "student-t"; }
    const char* operator()(const McpSpec&) const { return "mcp"; }
    const char* operator()(const LogisticSpec&) const { return "logistic"; }
  };
  return std::visit(Visitor{}, spec);
}

ProblemInstance instantiate(const ProblemSpec& spec, std::uint64_t seed) {
  struct Visitor {
    std::uint64_t seed;
    ProblemInstance operator()(const LassoSpec& s) const {
      LassoSpec seeded = s;
      seeded.seed = seed;
      auto inst = gen_lasso(seeded);
      return {std::move(inst.problem), Vector(seeded.n, 0.0)};
    }
    ProblemInstance operator()(const McpSpec& s) const {
      McpSpec seeded = s;
      seeded.seed = seed;
      return {gen_mcp(seeded), Vector(seeded.n, 0.0)};
    }
    ProblemInstance operator()(const StudentTSpec& s) const {
      StudentTSpec seeded = s;
      seeded.seed = seed;
      auto inst = gen_student_t(seeded);
      Rng x0_rng(seed ^ kX0SeedSalt);
      Vector x0(seeded.n);
      for (auto& v : x0) v = x0_rng.uniform_range(-10.0, 10.0);
      return {std::move(inst.problem), std::move(x0)};
    }
    ProblemInstance operator()(const LogisticSpec& s) const {
      auto dataset = parse_libsvm_file(s.dataset_path, s.n_override);
      auto problem = logistic_problem(std::move(dataset), s.lambda);
      Vector x0(problem.dim(), 0.0);
      return {std::move(problem), std::move(x0)};
    }
  };
  return std::visit(Visitor{seed}, spec);
}

CostMatrix::CostMatrix(std::vector<std::string> solvers, std::size_t n_problems)
    : solvers_(std::move(solvers)), n_problems_(n_problems),
      costs_(solvers_.size() * n_problems, kDnf) {}

double& CostMatrix::at(std::size_t problem, std::size_t solver) {
  return costs_[problem * solvers_.size() + solver];
}

double CostMatrix::at(std::size_t problem, std::size_t solver) const {
  return costs_[problem * solvers_.size() + solver];
}

double ProfileTable::value(std::size_t solver, double tau) const {
  double out = 0.0;
  for (std::size_t i = 0; i < taus.size() && taus[i] <= tau; ++i) out = p[solver][i];
  return out;
}

ProfileTable dolan_more(const CostMatrix& costs) {
  const std::size_t np = costs.num_problems();
  const std::size_t ns = costs.num_solvers();
  if (np == 0 || ns == 0) throw std::invalid_argument("dolan_more: empty cost matrix");

  // Ratios against the per-problem best; DNF cells get +inf and never enter
  // any P(tau).
  std::vector<double> ratios(np * ns);
  for (std::size_t pi = 0; pi < np; ++pi) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t si = 0; si < ns; ++si) {
      const double c = costs.at(pi, si);
      if (!std::isnan(c)) {
        if (!(c > 0.0) || !std::isfinite(c))
          throw std::invalid_argument("dolan_more: converged costs must be positive and finite");
        best = std::min(best, c);
      }
    }
    if (!std::isfinite(best))
      throw std::invalid_argument("dolan_more: every problem needs at least one converged solver");
    for (std::size_t si = 0; si < ns; ++si) {
      const double c = costs.at(pi, si);
      ratios[pi * ns + si] =
          std::isnan(c) ? std::numeric_limits<double>::infinity() : c / best;
    }
  }

  std::vector<double> taus;
  for (double r : ratios)
    if (std::isfinite(r)) taus.push_back(r);
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
  taus.push_back(taus.back() * 1.05);  // expose the plateau past the largest ratio

  ProfileTable table;
  table.solvers = costs.solvers();
  table.taus = taus;
  table.p.assign(ns, std::vector<double>(taus.size(), 0.0));
  for (std::size_t si = 0; si < ns; ++si)
    for (std::size_t ti = 0; ti < taus.size(); ++ti) {
      std::size_t count = 0;
      for (std::size_t pi = 0; pi < np; ++pi)
        if (ratios[pi * ns + si] <= taus[ti]) ++count;
      table.p[si][ti] = static_cast<double>(count) / static_cast<double>(np);
    }
  return table;
}

SuiteResult run_suite(const std::vector<ProblemSpec>& specs, const SuiteOptions& options) {
  if (specs.empty()) throw std::invalid_argument("run_suite: no problem specs");
  if (options.variants.empty()) throw std::invalid_argument("run_suite: no solver variants");
  if (options.repetitions < 1) throw std::invalid_argument("run_suite: repetitions must be >= 1");
  options.config.validate();
  for (const auto& spec : specs)
    if (std::holds_alternative<McpSpec>(spec))
      for (Variant v : options.variants)
        if (v == Variant::Apg)
          throw std::invalid_argument("run_suite: apg requires a convex nonsmooth term");

  struct Cell {
    std::size_t spec_index;
    int repetition;
    std::size_t variant_index;
  };
  std::vector<Cell> cells;
  for (std::size_t si = 0; si < specs.size(); ++si)
    for (int rep = 0; rep < options.repetitions; ++rep)
      for (std::size_t vi = 0; vi < options.variants.size(); ++vi)
        cells.push_back({si, rep, vi});

  std::vector<std::string> solver_names;
  for (Variant v : options.variants) solver_names.emplace_back(variant_name(v));
  const std::size_t n_problems = specs.size() * static_cast<std::size_t>(options.repetitions);

  SuiteResult result{std::vector<RunSummary>(cells.size()),
                     CostMatrix(solver_names, n_problems), CostMatrix(solver_names, n_problems)};

  auto run_cell = [&](std::size_t ci) {
    const Cell& cell = cells[ci];
    const std::uint64_t seed = options.seed_base + static_cast<std::uint64_t>(cell.repetition);
    ProblemInstance inst = instantiate(specs[cell.spec_index], seed);

    SolverConfig config = options.config;
    config.variant = options.variants[cell.variant_index];
    SolveReport report = solve(inst.problem, inst.x0, config);

    RunSummary& row = result.runs[ci];
    row = {cell.spec_index, seed,          config.variant,      report.status,
           report.iterations, report.wall_time_s, report.f,    report.eta_norm,
           report.switch_count, report.switch_ratio()};

    const std::size_t problem_index =
        cell.spec_index * static_cast<std::size_t>(options.repetitions) +
        static_cast<std::size_t>(cell.repetition);
    if (report.status == Status::Converged) {
      result.time_costs.at(problem_index, cell.variant_index) = report.wall_time_s;
      result.iteration_costs.at(problem_index, cell.variant_index) =
          static_cast<double>(std::max(report.iterations, 1L));
    }
  };

  if (options.jobs <= 1) {
    for (std::size_t ci = 0; ci < cells.size(); ++ci) run_cell(ci);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
      for (std::size_t ci = next.fetch_add(1); ci < cells.size(); ci = next.fetch_add(1)) {
        try {
          run_cell(ci);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<int>(options.jobs, static_cast<int>(cells.size()));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return result;
}

std::vector<AggregateRow> aggregate(const std::vector<RunSummary>& runs) {
  std::vector<AggregateRow> rows;
  std::map<std::pair<std::size_t, int>, std::size_t> index;  // (spec, variant) -> row
  for (const RunSummary& run : runs) {
    const auto key = std::make_pair(run.spec_index, static_cast<int>(run.variant));
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rows.size()).first;
      rows.push_back(AggregateRow{run.spec_index, run.variant});
    }
    AggregateRow& row = rows[it->second];
    row.runs += 1;
    if (run.status == Status::Converged) row.converged += 1;
    row.mean_iterations += static_cast<double>(run.iterations);
    row.mean_time_s += run.wall_time_s;
    row.mean_switches += static_cast<double>(run.switches);
    row.mean_switch_ratio += run.switch_ratio;
    row.mean_final_f += run.final_f;
  }
  for (AggregateRow& row : rows) {
    const double count = static_cast<double>(row.runs);
    row.mean_iterations /= count;
    row.mean_time_s /= count;
    row.mean_switches /= count;
    row.mean_switch_ratio /= count;
    row.mean_final_f /= count;
  }
  return rows;
}

double rate_envelope(const std::vector<Vector>& iterates, const Vector& x_ref) {
  if (iterates.empty()) throw std::invalid_argument("rate_envelope: empty iterate trace");
  double best = std::numeric_limits<double>::infinity();
  double statistic = 0.0;
  for (std::size_t k = 0; k < iterates.size(); ++k) {
    best = std::min(best, norm(subtract(iterates[k], x_ref)));
    statistic = std::max(statistic, best * std::sqrt(static_cast<double>(k + 1)));
  }
  return statistic;
}

}  // namespace proxcg
