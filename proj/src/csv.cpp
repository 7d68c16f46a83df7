#include "proxcg/csv.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "proxcg/errors.hpp"

namespace proxcg {

namespace {

constexpr const char* kCsvVersion = "# proxcg-csv v1";
constexpr const char* kTimingNote =
    "# wall-time columns are wall-clock measurements and not deterministic";

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("csv: cannot open " + path + " for writing");
  return out;
}

std::string fmt_long(long v) { return std::to_string(v); }

struct SpecFields {
  std::string family, m, n, s, lambda, c, nu, d, dataset;
};

SpecFields spec_fields(const ProblemSpec& spec) {
  struct Visitor {
    SpecFields operator()(const LassoSpec& sp) const {
      return {"lasso", std::to_string(sp.m), std::to_string(sp.n), std::to_string(sp.s),
              fmt_double(sp.lambda), "", "", "", ""};
    }
    SpecFields operator()(const McpSpec& sp) const {
      return {"mcp", std::to_string(sp.m), std::to_string(sp.n), std::to_string(sp.s),
              fmt_double(sp.lambda), fmt_double(sp.c), "", "", ""};
    }
    SpecFields operator()(const StudentTSpec& sp) const {
      return {"student-t", std::to_string(sp.m()), std::to_string(sp.n), "",
              fmt_double(sp.lambda), "", fmt_double(sp.nu), fmt_double(sp.dynamic_range_db), ""};
    }
    SpecFields operator()(const LogisticSpec& sp) const {
      return {"logistic", "", "", "", fmt_double(sp.lambda), "", "", "", sp.dataset_path};
    }
  };
  return std::visit(Visitor{}, spec);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

long to_long(const std::string& s, long line) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("csv: expected integer, got '" + s + "'", line);
  }
}

double to_double(const std::string& s, long line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("csv: expected number, got '" + s + "'", line);
  }
}

}  // namespace

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<SuiteRunRow> make_run_rows(const std::vector<ProblemSpec>& specs,
                                       const std::vector<RunSummary>& runs) {
  std::vector<SpecFields> fields;
  fields.reserve(specs.size());
  for (const auto& spec : specs) fields.push_back(spec_fields(spec));

  std::vector<SuiteRunRow> rows;
  rows.reserve(runs.size());
  for (const RunSummary& run : runs) {
    const SpecFields& f = fields.at(run.spec_index);
    SuiteRunRow row;
    row.family = f.family;
    row.m = f.m;
    row.n = f.n;
    row.s = f.s;
    row.lambda = f.lambda;
    row.c = f.c;
    row.nu = f.nu;
    row.d = f.d;
    row.dataset = f.dataset;
    row.seed = run.seed;
    row.variant = variant_name(run.variant);
    row.status = status_name(run.status);
    row.iterations = run.iterations;
    row.switches = run.switches;
    row.switch_ratio = run.switch_ratio;
    row.final_f = run.final_f;
    row.final_eta_norm = run.final_eta_norm;
    row.wall_time_s = run.wall_time_s;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_trace_csv(const std::string& path, const SolveReport& report) {
  auto out = open_out(path);
  out << kCsvVersion << "\n";
  out << "k,f,eta_norm,mu,alpha,step_kind,g_evals,h_evals,prox_evals\n";
  for (const TraceRow& row : report.trace) {
    out << row.k << ',' << fmt_double(row.f) << ',' << fmt_double(row.eta_norm) << ','
        << fmt_double(row.mu) << ',' << fmt_double(row.alpha) << ',' << step_kind_name(row.kind)
        << ',' << row.g_evals << ',' << row.h_evals << ',' << row.prox_evals << "\n";
  }
}

namespace {

constexpr const char* kRunHeader =
    "family,m,n,s,lambda,c,nu,d,dataset,seed,variant,status,iterations,switches,"
    "switch_ratio,final_f,final_eta_norm,wall_time_s";

void write_run_row(std::ofstream& out, const SuiteRunRow& r) {
  out << r.family << ',' << r.m << ',' << r.n << ',' << r.s << ',' << r.lambda << ',' << r.c
      << ',' << r.nu << ',' << r.d << ',' << r.dataset << ',' << r.seed << ',' << r.variant << ','
      << r.status << ',' << fmt_long(r.iterations) << ',' << fmt_long(r.switches) << ','
      << fmt_double(r.switch_ratio) << ',' << fmt_double(r.final_f) << ','
      << fmt_double(r.final_eta_norm) << ',' << fmt_double(r.wall_time_s) << "\n";
}

}  // namespace

void write_summary_csv(const std::string& path, const SuiteRunRow& row) {
  auto out = open_out(path);
  out << kCsvVersion << "\n" << kTimingNote << "\n" << kRunHeader << "\n";
  write_run_row(out, row);
}

void write_runs_csv(const std::string& path, const std::vector<SuiteRunRow>& rows) {
  auto out = open_out(path);
  out << kCsvVersion << "\n" << kTimingNote << "\n" << kRunHeader << "\n";
  for (const auto& row : rows) write_run_row(out, row);
}

void write_aggregate_csv(const std::string& path, const std::vector<ProblemSpec>& specs,
                         const std::vector<AggregateRow>& rows) {
  auto out = open_out(path);
  out << kCsvVersion << "\n" << kTimingNote << "\n";
  out << "family,m,n,s,lambda,c,nu,d,dataset,variant,runs,converged,mean_iterations,"
         "mean_switches,mean_switch_ratio,mean_final_f,mean_time_s\n";
  for (const AggregateRow& row : rows) {
    const SpecFields f = spec_fields(specs.at(row.spec_index));
    out << f.family << ',' << f.m << ',' << f.n << ',' << f.s << ',' << f.lambda << ',' << f.c
        << ',' << f.nu << ',' << f.d << ',' << f.dataset << ',' << variant_name(row.variant) << ','
        << row.runs << ',' << row.converged << ',' << fmt_double(row.mean_iterations) << ','
        << fmt_double(row.mean_switches) << ',' << fmt_double(row.mean_switch_ratio) << ','
        << fmt_double(row.mean_final_f) << ',' << fmt_double(row.mean_time_s) << "\n";
  }
}

void write_profile_csv(const std::string& path, const ProfileTable& table) {
  auto out = open_out(path);
  out << kCsvVersion << "\n";
  out << "solver,tau,P\n";
  for (std::size_t si = 0; si < table.solvers.size(); ++si)
    for (std::size_t ti = 0; ti < table.taus.size(); ++ti)
      out << table.solvers[si] << ',' << fmt_double(table.taus[ti]) << ','
          << fmt_double(table.p[si][ti]) << "\n";
}

std::vector<SuiteRunRow> read_runs_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("csv: cannot open " + path);

  std::vector<SuiteRunRow> rows;
  std::string line;
  long line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv_line(line);
    if (!saw_header) {
      if (line != kRunHeader)
        throw ParseError("csv: unexpected runs.csv header", line_no);
      saw_header = true;
      continue;
    }
    if (fields.size() != 18)
      throw ParseError("csv: expected 18 fields, got " + std::to_string(fields.size()), line_no);
    SuiteRunRow r;
    r.family = fields[0];
    r.m = fields[1];
    r.n = fields[2];
    r.s = fields[3];
    r.lambda = fields[4];
    r.c = fields[5];
    r.nu = fields[6];
    r.d = fields[7];
    r.dataset = fields[8];
    r.seed = static_cast<std::uint64_t>(to_long(fields[9], line_no));
    r.variant = fields[10];
    r.status = fields[11];
    r.iterations = to_long(fields[12], line_no);
    r.switches = to_long(fields[13], line_no);
    r.switch_ratio = to_double(fields[14], line_no);
    r.final_f = to_double(fields[15], line_no);
    r.final_eta_norm = to_double(fields[16], line_no);
    r.wall_time_s = to_double(fields[17], line_no);
    rows.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError("csv: missing runs.csv header", line_no);
  return rows;
}

CostMatrix cost_matrix_from_rows(const std::vector<SuiteRunRow>& rows, const std::string& metric) {
  if (metric != "time" && metric != "iterations")
    throw std::invalid_argument("cost metric must be 'time' or 'iterations'");
  if (rows.empty()) throw std::invalid_argument("cost_matrix_from_rows: no rows");

  auto problem_key = [](const SuiteRunRow& r) {
    return r.family + '|' + r.m + '|' + r.n + '|' + r.s + '|' + r.lambda + '|' + r.c + '|' +
           r.nu + '|' + r.d + '|' + r.dataset + '|' + std::to_string(r.seed);
  };

  std::vector<std::string> solvers;
  std::map<std::string, std::size_t> solver_index;
  std::vector<std::string> problems;
  std::map<std::string, std::size_t> problem_index;
  for (const auto& r : rows) {
    if (solver_index.emplace(r.variant, solvers.size()).second) solvers.push_back(r.variant);
    const std::string key = problem_key(r);
    if (problem_index.emplace(key, problems.size()).second) problems.push_back(key);
  }

  CostMatrix costs(solvers, problems.size());
  for (const auto& r : rows) {
    if (r.status != "converged") continue;
    const double cost = metric == "time" ? r.wall_time_s
                                         : static_cast<double>(std::max(r.iterations, 1L));
    costs.at(problem_index.at(problem_key(r)), solver_index.at(r.variant)) = cost;
  }
  return costs;
}

}  // namespace proxcg
