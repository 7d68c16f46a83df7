#pragma once

#include <string>
#include <vector>

#include "proxcg/bench.hpp"

namespace proxcg {

/// Suite description parsed from a flat key-value config file:
///
///   [suite]
///   variants = alg31, pgm        # comma separated
///   repetitions = 10
///   seed = 1
///   jobs = 1
///   tol = 1e-8                   # any SolverConfig field may be set here
///
///   [problem]                    # repeatable, one per instance family
///   family = lasso               # lasso | mcp | student-t | logistic
///   m = 500
///   n = 150
///   s = 30
///   lambda = 0.1
///
/// '#' starts a comment. Unknown keys are rejected with the line number.
struct SuiteConfigFile {
  SuiteOptions options;
  std::vector<ProblemSpec> problems;
};

SuiteConfigFile parse_suite_config(const std::string& path);
SuiteConfigFile parse_suite_config_text(const std::string& text);

}  // namespace proxcg
