#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace proxcg {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);
double norm_inf(const Vector& a);
/// y += a * x
void axpy(double a, const Vector& x, Vector& y);
Vector scaled(const Vector& x, double a);
/// a - b
Vector subtract(const Vector& a, const Vector& b);
/// x + a * d
Vector add_scaled(const Vector& x, double a, const Vector& d);
bool all_finite(const Vector& x);

/// Row-major dense matrix. Entries are validated finite on construction.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, Vector entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const Vector& entries() const { return entries_; }

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& y) const;

 private:
  std::size_t rows_, cols_;
  Vector entries_;
};

/// Compressed sparse row matrix. Column indices must be strictly ascending
/// within each row; stored values are finite and nonzero.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr,
               std::vector<std::size_t> col_idx, Vector values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }
  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::size_t>& col_idx() const { return col_idx_; }
  const Vector& values() const { return values_; }

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& y) const;
  DenseMatrix to_dense() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> col_idx_;
  Vector values_;
};

/// Orthonormal (norm="ortho") type-II DCT matrix, materialized explicitly.
DenseMatrix dct_matrix(std::size_t n);

/// Implicit subsampled orthonormal DCT-II operator: (Dx) restricted to the
/// row index set J. The selected rows are materialized once at construction.
class DctSubsampleOp {
 public:
  DctSubsampleOp(std::size_t signal_length, std::vector<std::size_t> indices);

  std::size_t rows() const { return indices_.size(); }
  std::size_t cols() const { return n_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& y) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> indices_;
  std::vector<double> rows_;  // |J| x n, row-major
};

/// Shape-checked linear map: dense, CSR, or DCT-subsample.
/// apply and apply_transpose are mutually adjoint.
class LinearOperator {
 public:
  LinearOperator(DenseMatrix m);
  LinearOperator(SparseMatrix m);
  LinearOperator(DctSubsampleOp m);

  std::size_t rows() const;
  std::size_t cols() const;
  Vector apply(const Vector& x) const;
  Vector apply_transpose(const Vector& y) const;

  bool is_sparse() const { return std::holds_alternative<SparseMatrix>(op_); }

 private:
  std::variant<DenseMatrix, SparseMatrix, DctSubsampleOp> op_;
};

Vector matvec(const LinearOperator& op, const Vector& x);
Vector matvec_t(const LinearOperator& op, const Vector& y);

}  // namespace proxcg
