#pragma once

#include <cstdint>

#include "proxcg/oracles.hpp"

namespace proxcg {

/// Random least-squares + l1 instance: A ~ U[0,1)^{m x n}, b = A x_true + 0.01 eps
/// with x_true holding exactly s ones at random positions and eps standard normal.
/// With sparse_a set, half of the entries of A are zeroed and A is stored as CSR.
struct LassoSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  double lambda = 0.1;
  bool sparse_a = false;
  std::uint64_t seed = 0;
};

/// Same data model with the MCP penalty (concavity scale c) instead of l1.
struct McpSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  double lambda = 0.1;
  double c = 10.0;
  bool sparse_a = false;
  std::uint64_t seed = 0;
};

/// Sparse-signal recovery through a subsampled DCT with Student's-t loss.
/// n must be divisible by 8; m = n/8 measurements, floor(n/40) spikes whose
/// magnitudes span a dynamic range of dynamic_range_db decibels.
struct StudentTSpec {
  std::size_t n = 0;
  double dynamic_range_db = 20.0;
  double lambda = 0.01;
  double nu = 0.001;
  std::uint64_t seed = 0;

  std::size_t m() const { return n / 8; }
  std::size_t spikes() const { return n / 40; }
};

struct LassoInstance {
  CompositeProblem problem;
  Vector x_true;
};

struct StudentTInstance {
  CompositeProblem problem;
  Vector x_true;
};

LassoInstance gen_lasso(const LassoSpec& spec);
StudentTInstance gen_student_t(const StudentTSpec& spec);
CompositeProblem gen_mcp(const McpSpec& spec);

}  // namespace proxcg
