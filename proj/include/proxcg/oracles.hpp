#pragma once

#include <cstddef>
#include <variant>

#include "proxcg/linalg.hpp"

namespace proxcg {

/// Smooth term g with value and gradient oracles.
///
/// Variants:
///   least_squares  g(x) = ||Ax - b||^2            (no 1/2 factor)
///   logistic       g(x) = sum_i log(1 + exp(-b_i x^T a_i)),  b_i in {-1,+1}
///   student_t      g(x) = sum_i log(1 + (Ax - b)_i^2 / nu)
class SmoothOracle {
 public:
  static SmoothOracle least_squares(LinearOperator a, Vector b);
  static SmoothOracle logistic(LinearOperator rows, Vector labels);
  static SmoothOracle student_t(LinearOperator a, Vector b, double nu = 0.001);

  double value(const Vector& x) const;
  Vector grad(const Vector& x) const;
  std::size_t dim() const;

  /// The data operator: A for the regression losses, the sample-row matrix
  /// for the logistic loss.
  const LinearOperator& linear_operator() const;
  /// The target vector: b for the regression losses, the +-1 labels for the
  /// logistic loss.
  const Vector& targets() const;

 private:
  struct LeastSquares {
    LinearOperator a;
    Vector b;
  };
  struct Logistic {
    LinearOperator rows;
    Vector labels;
  };
  struct StudentT {
    LinearOperator a;
    Vector b;
    double nu;
  };
  using Impl = std::variant<LeastSquares, Logistic, StudentT>;

  explicit SmoothOracle(Impl impl) : impl_(std::move(impl)) {}
  Impl impl_;
};

/// Nonsmooth term h with value, proximal mapping, directional derivative,
/// and weak-convexity modulus rho (0 for the convex variants, 1/c for MCP).
class ProxOracle {
 public:
  static ProxOracle zero();
  static ProxOracle l1(double lambda);
  static ProxOracle mcp(double lambda, double c);

  double value(const Vector& x) const;

  /// argmin_u h(u) + ||u - v||^2 / (2 mu), componentwise closed forms.
  /// For MCP the step must satisfy mu < c, otherwise the prox subproblem
  /// is not strongly convex and the call is rejected.
  Vector prox(const Vector& v, double mu) const;

  /// One-sided directional derivative h'(x; d).
  double dir_deriv(const Vector& x, const Vector& d) const;

  double modulus() const;

 private:
  struct Zero {};
  struct L1 {
    double lambda;
  };
  struct Mcp {
    double lambda;
    double c;
  };
  using Impl = std::variant<Zero, L1, Mcp>;

  explicit ProxOracle(Impl impl) : impl_(std::move(impl)) {}
  Impl impl_;
};

/// Composite objective f = g + h.
struct CompositeProblem {
  SmoothOracle g;
  ProxOracle h;

  std::size_t dim() const { return g.dim(); }
  double rho() const { return h.modulus(); }
  double f(const Vector& x) const { return g.value(x) + h.value(x); }
};

}  // namespace proxcg
