#include "proxcg/suite_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "proxcg/errors.hpp"

namespace proxcg {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream stream(s);
  while (std::getline(stream, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double to_double(const std::string& v, long line) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParseError("config: expected number, got '" + v + "'", line);
  }
}

long to_long(const std::string& v, long line) {
  try {
    std::size_t pos = 0;
    const long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ParseError("config: expected integer, got '" + v + "'", line);
  }
}

bool to_bool(const std::string& v, long line) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ParseError("config: expected boolean, got '" + v + "'", line);
}

// Mutable view of the [problem] section being assembled.
struct ProblemDraft {
  std::string family;
  std::size_t m = 0, n = 0, s = 0;
  double lambda = 0.1;
  double c = 10.0;
  double nu = 0.001;
  double d = 20.0;
  bool sparse = false;
  std::string dataset;
  std::size_t n_override = 0;
  long line = 0;  // where the section started, for diagnostics

  ProblemSpec build() const {
    if (family == "lasso") return LassoSpec{m, n, s, lambda, sparse, 0};
    if (family == "mcp") return McpSpec{m, n, s, lambda, c, sparse, 0};
    if (family == "student-t") return StudentTSpec{n, d, lambda, nu, 0};
    if (family == "logistic") return LogisticSpec{dataset, lambda, n_override};
    throw ParseError("config: unknown or missing family '" + family + "'", line);
  }
};

void apply_suite_key(SuiteOptions& options, const std::string& key, const std::string& value,
                     long line) {
  SolverConfig& cfg = options.config;
  if (key == "variants") {
    options.variants.clear();
    for (const auto& name : split_list(value)) options.variants.push_back(variant_from_name(name));
  } else if (key == "repetitions") {
    options.repetitions = static_cast<int>(to_long(value, line));
  } else if (key == "seed") {
    options.seed_base = static_cast<std::uint64_t>(to_long(value, line));
  } else if (key == "jobs") {
    options.jobs = static_cast<int>(to_long(value, line));
  } else if (key == "tol") {
    cfg.tol = to_double(value, line);
  } else if (key == "max_iter") {
    cfg.max_iter = to_long(value, line);
  } else if (key == "mu0") {
    cfg.mu0 = to_double(value, line);
  } else if (key == "kappa") {
    cfg.kappa = to_double(value, line);
  } else if (key == "nu_hat") {
    cfg.nu_hat = to_double(value, line);
  } else if (key == "delta") {
    cfg.delta = to_double(value, line);
  } else if (key == "T") {
    cfg.trial_coeff = to_double(value, line);
  } else if (key == "theta") {
    cfg.theta = to_double(value, line);
  } else if (key == "t_bar") {
    cfg.t_bar = to_double(value, line);
  } else if (key == "tau") {
    cfg.tau = to_double(value, line);
  } else if (key == "mu_increase") {
    cfg.mu_increase = to_bool(value, line);
  } else if (key == "mu_increase_factor") {
    cfg.mu_increase_factor = to_double(value, line);
  } else {
    throw ParseError("config: unknown [suite] key '" + key + "'", line);
  }
}

void apply_problem_key(ProblemDraft& draft, const std::string& key, const std::string& value,
                       long line) {
  if (key == "family") draft.family = value;
  else if (key == "m") draft.m = static_cast<std::size_t>(to_long(value, line));
  else if (key == "n") draft.n = static_cast<std::size_t>(to_long(value, line));
  else if (key == "s") draft.s = static_cast<std::size_t>(to_long(value, line));
  else if (key == "lambda") draft.lambda = to_double(value, line);
  else if (key == "c") draft.c = to_double(value, line);
  else if (key == "nu") draft.nu = to_double(value, line);
  else if (key == "d") draft.d = to_double(value, line);
  else if (key == "sparse") draft.sparse = to_bool(value, line);
  else if (key == "dataset") draft.dataset = value;
  else if (key == "n_features") draft.n_override = static_cast<std::size_t>(to_long(value, line));
  else throw ParseError("config: unknown [problem] key '" + key + "'", line);
}

}  // namespace

SuiteConfigFile parse_suite_config_text(const std::string& text) {
  SuiteConfigFile file;
  file.options.variants = {Variant::ProxCg};

  enum class Section { None, Suite, Problem };
  Section section = Section::None;
  ProblemDraft draft;
  bool have_draft = false;

  auto flush_draft = [&]() {
    if (have_draft) {
      file.problems.push_back(draft.build());
      have_draft = false;
    }
  };

  std::istringstream stream(text);
  std::string raw;
  long line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("config: unterminated section header", line_no);
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "suite") {
        flush_draft();
        section = Section::Suite;
      } else if (name == "problem") {
        flush_draft();
        draft = ProblemDraft{};
        draft.line = line_no;
        have_draft = true;
        section = Section::Problem;
      } else {
        throw ParseError("config: unknown section [" + name + "]", line_no);
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config: expected key = value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("config: empty key or value", line_no);

    switch (section) {
      case Section::Suite: apply_suite_key(file.options, key, value, line_no); break;
      case Section::Problem: apply_problem_key(draft, key, value, line_no); break;
      case Section::None:
        throw ParseError("config: key outside any [suite] or [problem] section", line_no);
    }
  }
  flush_draft();
  if (file.problems.empty()) throw std::runtime_error("config: no [problem] sections");
  return file;
}

SuiteConfigFile parse_suite_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_suite_config_text(buffer.str());
}

}  // namespace proxcg
