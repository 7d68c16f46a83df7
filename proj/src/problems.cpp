#include "proxcg/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "proxcg/rng.hpp"

namespace proxcg {

namespace {

// Shared data model for the LASSO and MCP families. Draw order is fixed so
// that equal (dims, seed) produce identical data regardless of the penalty:
// A entries row-major, then the support of x_true, then the noise.
struct RegressionData {
  LinearOperator a;
  Vector b;
  Vector x_true;
};

RegressionData gen_regression_data(std::size_t m, std::size_t n, std::size_t s, bool sparse_a,
                                   std::uint64_t seed) {
  if (m == 0 || n == 0) throw std::invalid_argument("generator: m and n must be positive");
  if (s > n) throw std::invalid_argument("generator: s must not exceed n");
  Rng rng(seed);

  auto draw_entry = [&]() {
    const double v = rng.uniform();
    if (!sparse_a) return v;
    return rng.uniform() < 0.5 ? 0.0 : v;
  };

  LinearOperator a = [&]() -> LinearOperator {
    if (!sparse_a) {
      Vector entries(m * n);
      for (auto& e : entries) e = draw_entry();
      return DenseMatrix(m, n, std::move(entries));
    }
    std::vector<std::size_t> row_ptr(m + 1, 0);
    std::vector<std::size_t> col_idx;
    Vector values;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double v = draw_entry();
        if (v != 0.0) {
          col_idx.push_back(j);
          values.push_back(v);
        }
      }
      row_ptr[i + 1] = values.size();
    }
    return SparseMatrix(m, n, std::move(row_ptr), std::move(col_idx), std::move(values));
  }();

  Vector x_true(n, 0.0);
  for (std::size_t idx : rng.sample_without_replacement(n, s)) x_true[idx] = 1.0;

  Vector b = a.apply(x_true);
  for (auto& bi : b) bi += 0.01 * rng.normal();
  return {std::move(a), std::move(b), std::move(x_true)};
}

}  // namespace

LassoInstance gen_lasso(const LassoSpec& spec) {
  RegressionData data = gen_regression_data(spec.m, spec.n, spec.s, spec.sparse_a, spec.seed);
  CompositeProblem problem{SmoothOracle::least_squares(std::move(data.a), std::move(data.b)),
                           ProxOracle::l1(spec.lambda)};
  return {std::move(problem), std::move(data.x_true)};
}

CompositeProblem gen_mcp(const McpSpec& spec) {
  RegressionData data = gen_regression_data(spec.m, spec.n, spec.s, spec.sparse_a, spec.seed);
  return {SmoothOracle::least_squares(std::move(data.a), std::move(data.b)),
          ProxOracle::mcp(spec.lambda, spec.c)};
}

StudentTInstance gen_student_t(const StudentTSpec& spec) {
  if (spec.n == 0 || spec.n % 8 != 0)
    throw std::invalid_argument("gen_student_t: n must be positive and divisible by 8");
  Rng rng(spec.seed);

  const std::size_t n = spec.n;
  const std::size_t m = spec.m();
  const std::size_t k = spec.spikes();

  Vector x_true(n, 0.0);
  for (std::size_t idx : rng.sample_without_replacement(n, k)) {
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const double expo = rng.uniform();
    x_true[idx] = sign * std::pow(10.0, spec.dynamic_range_db * expo / 20.0);
  }

  std::vector<std::size_t> j_set = rng.sample_without_replacement(n, m);
  std::sort(j_set.begin(), j_set.end());
  LinearOperator a{DctSubsampleOp(n, std::move(j_set))};

  Vector b = a.apply(x_true);
  for (auto& bi : b) bi += 0.1 * rng.student_t5();

  CompositeProblem problem{SmoothOracle::student_t(std::move(a), std::move(b), spec.nu),
                           ProxOracle::l1(spec.lambda)};
  return {std::move(problem), std::move(x_true)};
}

}  // namespace proxcg
