#pragma once

#include "bicross/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bicross {

class LinOp;

/// Column-major sparse matrix over Q(i). Exact arithmetic throughout; used
/// to materialize operators on enumerated bases for rank and inverse
/// checks. Row/column indices follow enumerate_words order.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  void set(size_t r, size_t c, Scalar v);
  Scalar get(size_t r, size_t c) const;
  const std::map<size_t, Scalar>& column(size_t c) const { return data_[c]; }
  std::map<size_t, Scalar>& column_mut(size_t c) { return data_[c]; }

  size_t nnz() const;

  /// Exact rank by Gaussian elimination. The parallel variant distributes
  /// the row updates of each elimination step across threads; both variants
  /// produce identical results.
  size_t rank() const;
  size_t rank_serial() const;

  /// Exact inverse of a square matrix, or nullopt when singular.
  std::optional<SparseMatrix> inverse() const;
  std::optional<SparseMatrix> inverse_serial() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rank_impl(bool parallel) const;
  std::optional<SparseMatrix> inverse_impl(bool parallel) const;

  size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<size_t, Scalar>> data_;
};

/// Matrix of an operator between enumerable shapes: column j holds the
/// image of the j-th basis word. The parallel variant fills columns across
/// threads; apply closures must be pure (they are, project-wide).
SparseMatrix materialize(const LinOp& f);
SparseMatrix materialize_serial(const LinOp& f);

}  // namespace bicross
