#include "proxcg/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace proxcg {

namespace {

void check_same_dim(const Vector& a, const Vector& b, const char* where) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

void check_dim(std::size_t got, std::size_t want, const char* where) {
  if (got != want)
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (got " +
                                std::to_string(got) + ", want " + std::to_string(want) + ")");
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
  check_same_dim(a, b, "dot");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Vector& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

void axpy(double a, const Vector& x, Vector& y) {
  check_same_dim(x, y, "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

Vector scaled(const Vector& x, double a) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  check_same_dim(a, b, "subtract");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector add_scaled(const Vector& x, double a, const Vector& d) {
  check_same_dim(x, d, "add_scaled");
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + a * d[i];
  return r;
}

bool all_finite(const Vector& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Vector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("DenseMatrix: entries length must be rows*cols");
  if (!all_finite(entries_)) throw std::invalid_argument("DenseMatrix: entries must be finite");
}

Vector DenseMatrix::apply(const Vector& x) const {
  check_dim(x.size(), cols_, "DenseMatrix::apply");
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = entries_.data() + i * cols_;
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

Vector DenseMatrix::apply_transpose(const Vector& y) const {
  check_dim(y.size(), rows_, "DenseMatrix::apply_transpose");
  Vector x(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = entries_.data() + i * cols_;
    const double yi = y[i];
    if (yi == 0.0) continue;
    for (std::size_t j = 0; j < cols_; ++j) x[j] += row[j] * yi;
  }
  return x;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr,
                           std::vector<std::size_t> col_idx, Vector values)
    : rows_(rows), cols_(cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)),
      values_(std::move(values)) {
  if (row_ptr_.size() != rows_ + 1) throw std::invalid_argument("SparseMatrix: row_ptr size");
  if (row_ptr_.front() != 0 || row_ptr_.back() != values_.size())
    throw std::invalid_argument("SparseMatrix: row_ptr bounds");
  if (col_idx_.size() != values_.size()) throw std::invalid_argument("SparseMatrix: col_idx size");
  for (std::size_t i = 0; i < rows_; ++i) {
    if (row_ptr_[i] > row_ptr_[i + 1]) throw std::invalid_argument("SparseMatrix: row_ptr not monotone");
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      if (col_idx_[p] >= cols_) throw std::invalid_argument("SparseMatrix: column index out of range");
      if (p > row_ptr_[i] && col_idx_[p - 1] >= col_idx_[p])
        throw std::invalid_argument("SparseMatrix: column indices must ascend within a row");
    }
  }
  for (double v : values_)
    if (!std::isfinite(v) || v == 0.0)
      throw std::invalid_argument("SparseMatrix: values must be finite and nonzero");
}

Vector SparseMatrix::apply(const Vector& x) const {
  check_dim(x.size(), cols_, "SparseMatrix::apply");
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) acc += values_[p] * x[col_idx_[p]];
    y[i] = acc;
  }
  return y;
}

Vector SparseMatrix::apply_transpose(const Vector& y) const {
  check_dim(y.size(), rows_, "SparseMatrix::apply_transpose");
  Vector x(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double yi = y[i];
    if (yi == 0.0) continue;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) x[col_idx_[p]] += values_[p] * yi;
  }
  return x;
}

DenseMatrix SparseMatrix::to_dense() const {
  Vector entries(rows_ * cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      entries[i * cols_ + col_idx_[p]] = values_[p];
  return DenseMatrix(rows_, cols_, std::move(entries));
}

DenseMatrix dct_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dct_matrix: n must be positive");
  Vector entries(n * n);
  const double c0 = std::sqrt(1.0 / static_cast<double>(n));
  const double cj = std::sqrt(2.0 / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double scale = (j == 0) ? c0 : cj;
    for (std::size_t i = 0; i < n; ++i)
      entries[j * n + i] =
          scale * std::cos(M_PI * static_cast<double>(j) * (2.0 * static_cast<double>(i) + 1.0) /
                           (2.0 * static_cast<double>(n)));
  }
  return DenseMatrix(n, n, std::move(entries));
}

DctSubsampleOp::DctSubsampleOp(std::size_t signal_length, std::vector<std::size_t> indices)
    : n_(signal_length), indices_(std::move(indices)) {
  if (n_ == 0) throw std::invalid_argument("DctSubsampleOp: signal length must be positive");
  rows_.resize(indices_.size() * n_);
  const double c0 = std::sqrt(1.0 / static_cast<double>(n_));
  const double cj = std::sqrt(2.0 / static_cast<double>(n_));
  for (std::size_t r = 0; r < indices_.size(); ++r) {
    const std::size_t j = indices_[r];
    if (j >= n_) throw std::invalid_argument("DctSubsampleOp: index out of range");
    const double scale = (j == 0) ? c0 : cj;
    for (std::size_t i = 0; i < n_; ++i)
      rows_[r * n_ + i] =
          scale * std::cos(M_PI * static_cast<double>(j) * (2.0 * static_cast<double>(i) + 1.0) /
                           (2.0 * static_cast<double>(n_)));
  }
}

Vector DctSubsampleOp::apply(const Vector& x) const {
  check_dim(x.size(), n_, "DctSubsampleOp::apply");
  Vector y(indices_.size(), 0.0);
  for (std::size_t r = 0; r < indices_.size(); ++r) {
    const double* row = rows_.data() + r * n_;
    double acc = 0.0;
    for (std::size_t i = 0; i < n_; ++i) acc += row[i] * x[i];
    y[r] = acc;
  }
  return y;
}

Vector DctSubsampleOp::apply_transpose(const Vector& y) const {
  check_dim(y.size(), indices_.size(), "DctSubsampleOp::apply_transpose");
  Vector x(n_, 0.0);
  for (std::size_t r = 0; r < indices_.size(); ++r) {
    const double* row = rows_.data() + r * n_;
    const double yr = y[r];
    if (yr == 0.0) continue;
    for (std::size_t i = 0; i < n_; ++i) x[i] += row[i] * yr;
  }
  return x;
}

LinearOperator::LinearOperator(DenseMatrix m) : op_(std::move(m)) {}
LinearOperator::LinearOperator(SparseMatrix m) : op_(std::move(m)) {}
LinearOperator::LinearOperator(DctSubsampleOp m) : op_(std::move(m)) {}

std::size_t LinearOperator::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, op_);
}

std::size_t LinearOperator::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, op_);
}

Vector LinearOperator::apply(const Vector& x) const {
  return std::visit([&](const auto& m) { return m.apply(x); }, op_);
}

Vector LinearOperator::apply_transpose(const Vector& y) const {
  return std::visit([&](const auto& m) { return m.apply_transpose(y); }, op_);
}

Vector matvec(const LinearOperator& op, const Vector& x) { return op.apply(x); }
Vector matvec_t(const LinearOperator& op, const Vector& y) { return op.apply_transpose(y); }

}  // namespace proxcg
