#include "proxcg/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace proxcg {

namespace {

void check_dim(std::size_t got, std::size_t want, const char* where) {
  if (got != want)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (got " +
                                std::to_string(got) + ", want " + std::to_string(want) + ")");
}

void check_finite_input(const Vector& x, const char* where) {
  if (!all_finite(x)) throw std::invalid_argument(std::string(where) + ": non-finite input");
}

// log(1 + exp(z)) without overflow for large |z|.
double log1p_exp(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

double logistic_sigma(double z) {
  // sigma(z) = 1 / (1 + exp(-z)), evaluated on the non-overflowing branch
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

SmoothOracle SmoothOracle::least_squares(LinearOperator a, Vector b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("least_squares: b length must equal operator rows");
  return SmoothOracle(Impl{LeastSquares{std::move(a), std::move(b)}});
}

SmoothOracle SmoothOracle::logistic(LinearOperator rows, Vector labels) {
  if (rows.rows() != labels.size())
    throw std::invalid_argument("logistic: label count must equal operator rows");
  for (double b : labels)
    if (b != 1.0 && b != -1.0) throw std::invalid_argument("logistic: labels must be +1 or -1");
  return SmoothOracle(Impl{Logistic{std::move(rows), std::move(labels)}});
}

SmoothOracle SmoothOracle::student_t(LinearOperator a, Vector b, double nu) {
  if (a.rows() != b.size())
    throw std::invalid_argument("student_t: b length must equal operator rows");
  if (!(nu > 0.0)) throw std::invalid_argument("student_t: nu must be positive");
  return SmoothOracle(Impl{StudentT{std::move(a), std::move(b), nu}});
}

const LinearOperator& SmoothOracle::linear_operator() const {
  return std::visit([](const auto& o) -> const LinearOperator& {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Logistic>)
      return o.rows;
    else
      return o.a;
  }, impl_);
}

const Vector& SmoothOracle::targets() const {
  return std::visit([](const auto& o) -> const Vector& {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Logistic>)
      return o.labels;
    else
      return o.b;
  }, impl_);
}

std::size_t SmoothOracle::dim() const {
  return std::visit([](const auto& o) -> std::size_t {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Logistic>)
      return o.rows.cols();
    else
      return o.a.cols();
  }, impl_);
}

double SmoothOracle::value(const Vector& x) const {
  check_dim(x.size(), dim(), "SmoothOracle::value");
  check_finite_input(x, "SmoothOracle::value");
  return std::visit([&](const auto& o) -> double {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, LeastSquares>) {
      const Vector r = o.a.apply(x);
      double acc = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double d = r[i] - o.b[i];
        acc += d * d;
      }
      return acc;
    } else if constexpr (std::is_same_v<T, Logistic>) {
      const Vector z = o.rows.apply(x);
      double acc = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i) acc += log1p_exp(-o.labels[i] * z[i]);
      return acc;
    } else {
      const Vector r = o.a.apply(x);
      double acc = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double d = r[i] - o.b[i];
        acc += std::log1p(d * d / o.nu);
      }
      return acc;
    }
  }, impl_);
}

Vector SmoothOracle::grad(const Vector& x) const {
  check_dim(x.size(), dim(), "SmoothOracle::grad");
  check_finite_input(x, "SmoothOracle::grad");
  return std::visit([&](const auto& o) -> Vector {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, LeastSquares>) {
      Vector r = o.a.apply(x);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = 2.0 * (r[i] - o.b[i]);
      return o.a.apply_transpose(r);
    } else if constexpr (std::is_same_v<T, Logistic>) {
      Vector z = o.rows.apply(x);
      for (std::size_t i = 0; i < z.size(); ++i)
        z[i] = -o.labels[i] * logistic_sigma(-o.labels[i] * z[i]);
      return o.rows.apply_transpose(z);
    } else {
      Vector r = o.a.apply(x);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double d = r[i] - o.b[i];
        r[i] = 2.0 * d / (o.nu + d * d);
      }
      return o.a.apply_transpose(r);
    }
  }, impl_);
}

ProxOracle ProxOracle::zero() { return ProxOracle(Impl{Zero{}}); }

ProxOracle ProxOracle::l1(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("l1: lambda must be positive");
  return ProxOracle(Impl{L1{lambda}});
}

ProxOracle ProxOracle::mcp(double lambda, double c) {
  if (!(lambda > 0.0)) throw std::invalid_argument("mcp: lambda must be positive");
  if (!(c > 0.0)) throw std::invalid_argument("mcp: c must be positive");
  return ProxOracle(Impl{Mcp{lambda, c}});
}

double ProxOracle::modulus() const {
  return std::visit([](const auto& o) -> double {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Mcp>)
      return 1.0 / o.c;
    else
      return 0.0;
  }, impl_);
}

double ProxOracle::value(const Vector& x) const {
  return std::visit([&](const auto& o) -> double {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Zero>) {
      return 0.0;
    } else if constexpr (std::is_same_v<T, L1>) {
      double acc = 0.0;
      for (double v : x) acc += std::abs(v);
      return o.lambda * acc;
    } else {
      const double knee = o.c * o.lambda;
      double acc = 0.0;
      for (double v : x) {
        const double a = std::abs(v);
        acc += (a <= knee) ? o.lambda * a - v * v / (2.0 * o.c) : 0.5 * o.c * o.lambda * o.lambda;
      }
      return acc;
    }
  }, impl_);
}

Vector ProxOracle::prox(const Vector& v, double mu) const {
  if (!(mu > 0.0)) throw std::invalid_argument("prox: step must be positive");
  return std::visit([&](const auto& o) -> Vector {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Zero>) {
      return v;
    } else if constexpr (std::is_same_v<T, L1>) {
      const double t = mu * o.lambda;
      Vector p(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        p[i] = sign(v[i]) * std::max(std::abs(v[i]) - t, 0.0);
      return p;
    } else {
      // Firm thresholding; requires mu < c so the subproblem stays strongly convex.
      if (!(mu < o.c))
        throw std::invalid_argument("mcp prox: step mu must satisfy mu < c (mu < 1/rho)");
      const double t = mu * o.lambda;
      const double knee = o.c * o.lambda;
      const double shrink = 1.0 - mu / o.c;
      Vector p(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a <= t)
          p[i] = 0.0;
        else if (a <= knee)
          p[i] = sign(v[i]) * (a - t) / shrink;
        else
          p[i] = v[i];
      }
      return p;
    }
  }, impl_);
}

double ProxOracle::dir_deriv(const Vector& x, const Vector& d) const {
  if (x.size() != d.size()) throw std::invalid_argument("dir_deriv: dimension mismatch");
  return std::visit([&](const auto& o) -> double {
    using T = std::decay_t<decltype(o)>;
    if constexpr (std::is_same_v<T, Zero>) {
      return 0.0;
    } else if constexpr (std::is_same_v<T, L1>) {
      double acc = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i)
        acc += (x[i] != 0.0) ? sign(x[i]) * d[i] : std::abs(d[i]);
      return o.lambda * acc;
    } else {
      const double knee = o.c * o.lambda;
      double acc = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        if (x[i] == 0.0)
          acc += o.lambda * std::abs(d[i]);
        else if (a < knee)
          acc += (o.lambda * sign(x[i]) - x[i] / o.c) * d[i];
        // |x_i| >= c*lambda: flat branch, derivative 0
      }
      return acc;
    }
  }, impl_);
}

}  // namespace proxcg
