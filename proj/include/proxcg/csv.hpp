#pragma once

#include <string>
#include <vector>

#include "proxcg/bench.hpp"

namespace proxcg {

/// Round-trippable float formatting shared by all CSV emitters.
std::string fmt_double(double v);

/// One runs.csv row; spec fields are kept as written so profiles can group
/// problems without re-deriving them.
struct SuiteRunRow {
  std::string family;
  std::string m, n, s, lambda, c, nu, d, dataset;
  std::uint64_t seed = 0;
  std::string variant;
  std::string status;
  long iterations = 0;
  long switches = 0;
  double switch_ratio = 0.0;
  double final_f = 0.0;
  double final_eta_norm = 0.0;
  double wall_time_s = 0.0;
};

std::vector<SuiteRunRow> make_run_rows(const std::vector<ProblemSpec>& specs,
                                       const std::vector<RunSummary>& runs);

void write_trace_csv(const std::string& path, const SolveReport& report);
void write_summary_csv(const std::string& path, const SuiteRunRow& row);
void write_runs_csv(const std::string& path, const std::vector<SuiteRunRow>& rows);
void write_aggregate_csv(const std::string& path, const std::vector<ProblemSpec>& specs,
                         const std::vector<AggregateRow>& rows);
void write_profile_csv(const std::string& path, const ProfileTable& table);

/// Reads a runs.csv produced by write_runs_csv. Throws ParseError with the
/// offending file line on malformed input.
std::vector<SuiteRunRow> read_runs_csv(const std::string& path);

/// Group run rows into a cost matrix: problems are distinct
/// (family, spec fields, seed) keys, solvers are distinct variants.
/// metric is "time" or "iterations"; non-converged rows become DNF cells.
CostMatrix cost_matrix_from_rows(const std::vector<SuiteRunRow>& rows, const std::string& metric);

}  // namespace proxcg
