#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "proxcg/linalg.hpp"
#include "proxcg/rng.hpp"

using namespace proxcg;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("dense identity matvec") {
  DenseMatrix eye(2, 2, {1, 0, 0, 1});
  CHECK(eye.apply({3, 4}) == Vector{3, 4});
  CHECK(eye.apply_transpose({1, 2}) == Vector{1, 2});
}

TEST_CASE("sparse matvec by hand") {
  // [[0, 2], [0, 0]]
  SparseMatrix a(2, 2, {0, 1, 1}, {1}, {2.0});
  CHECK(a.apply({1, 1}) == Vector{2, 0});
  CHECK(a.apply_transpose({1, 0}) == Vector{0, 2});
}

TEST_CASE("sparse matrix validation") {
  CHECK_THROWS_AS(SparseMatrix(2, 2, {0, 1}, {0}, {1.0}), std::invalid_argument);  // row_ptr size
  CHECK_THROWS_AS(SparseMatrix(1, 2, {0, 2}, {1, 0}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix(1, 2, {0, 1}, {5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SparseMatrix(1, 2, {0, 1}, {0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(DenseMatrix(1, 2, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DenseMatrix(1, 1, {std::nan("")}), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
  DenseMatrix a(2, 3, Vector(6, 1.0));
  CHECK_THROWS_AS(a.apply(Vector(2, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(a.apply_transpose(Vector(3, 1.0)), std::invalid_argument);
}

TEST_CASE("dct subsample row zero") {
  DctSubsampleOp op(2, {0});
  const Vector y = op.apply({1, 1});
  REQUIRE(y.size() == 1);
  CHECK(y[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("dct matrix is orthonormal up to n=64") {
  for (std::size_t n : {2u, 3u, 16u, 64u}) {
    DenseMatrix d = dct_matrix(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += d(k, i) * d(k, j);
        worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("operators are adjoint pairs") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng.below(12);
    const std::size_t n = 1 + rng.below(12);

    LinearOperator op = [&]() -> LinearOperator {
      switch (trial % 3) {
        case 0: {
          Vector entries(m * n);
          for (auto& e : entries) e = rng.uniform_range(-2, 2);
          return DenseMatrix(m, n, std::move(entries));
        }
        case 1: {
          std::vector<std::size_t> row_ptr{0};
          std::vector<std::size_t> col_idx;
          Vector values;
          for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j)
              if (rng.uniform() < 0.4) {
                col_idx.push_back(j);
                values.push_back(rng.uniform_range(0.1, 2.0));
              }
            row_ptr.push_back(values.size());
          }
          return SparseMatrix(m, n, std::move(row_ptr), std::move(col_idx), std::move(values));
        }
        default: {
          const std::size_t len = 8 * (1 + rng.below(8));
          auto idx = rng.sample_without_replacement(len, 1 + rng.below(len / 2));
          return DctSubsampleOp(len, std::move(idx));
        }
      }
    }();

    Vector x(op.cols()), y(op.rows());
    for (auto& v : x) v = rng.normal();
    for (auto& v : y) v = rng.normal();
    const double lhs = dot(op.apply(x), y);
    const double rhs = dot(x, op.apply_transpose(y));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + norm(x) * norm(y)));
  }
}

TEST_CASE("csr and dense products agree") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng.below(10);
    const std::size_t n = 2 + rng.below(10);
    std::vector<std::size_t> row_ptr{0};
    std::vector<std::size_t> col_idx;
    Vector values;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (rng.uniform() < 0.5) {
          col_idx.push_back(j);
          values.push_back(rng.uniform_range(-3, 3));
        }
      row_ptr.push_back(values.size());
    }
    SparseMatrix sparse(m, n, row_ptr, col_idx, values);
    DenseMatrix dense = sparse.to_dense();

    Vector x(n), y(m);
    for (auto& v : x) v = rng.normal();
    for (auto& v : y) v = rng.normal();
    Vector ax_sparse = sparse.apply(x);
    Vector ax_dense = dense.apply(x);
    Vector aty_sparse = sparse.apply_transpose(y);
    Vector aty_dense = dense.apply_transpose(y);
    for (std::size_t i = 0; i < m; ++i) CHECK(ax_sparse[i] == doctest::Approx(ax_dense[i]).epsilon(1e-12));
    for (std::size_t j = 0; j < n; ++j)
      CHECK(aty_sparse[j] == doctest::Approx(aty_dense[j]).epsilon(1e-12));
  }
}

TEST_CASE("rng determinism") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());
}

TEST_CASE("rng moments") {
  Rng rng(2024);
  const int n = 100000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += rng.uniform();
  mean /= n;
  CHECK(mean > 0.49);
  CHECK(mean < 0.51);

  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  const double variance = sum_sq / n - (sum / n) * (sum / n);
  CHECK(variance > 0.97);
  CHECK(variance < 1.03);
}

TEST_CASE("student t5 variance") {
  Rng rng(99);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = rng.student_t5();
    sum += t;
    sum_sq += t * t;
  }
  const double variance = sum_sq / n - (sum / n) * (sum / n);
  // Var(t_5) = 5/3
  CHECK(variance > 5.0 / 3.0 * 0.9);
  CHECK(variance < 5.0 / 3.0 * 1.1);
}

TEST_CASE("sampling without replacement") {
  Rng rng(5);
  auto picks = rng.sample_without_replacement(10, 10);
  std::vector<bool> seen(10, false);
  for (auto p : picks) {
    CHECK(!seen[p]);
    seen[p] = true;
  }
  CHECK_THROWS_AS(rng.sample_without_replacement(3, 4), std::invalid_argument);
}

TEST_SUITE_END();
