#include "bicross/matrix.hpp"

#include "bicross/linop.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace bicross {

void SparseMatrix::set(size_t r, size_t c, Scalar v) {
  if (v.is_zero())
    data_[c].erase(r);
  else
    data_[c][r] = std::move(v);
}

Scalar SparseMatrix::get(size_t r, size_t c) const {
  auto it = data_[c].find(r);
  return it == data_[c].end() ? Scalar::zero() : it->second;
}

size_t SparseMatrix::nnz() const {
  size_t n = 0;
  for (const auto& col : data_) n += col.size();
  return n;
}

namespace {

using Row = std::map<size_t, Scalar>;

std::vector<Row> to_rows(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows());
  for (size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[r][c] = v;
  return rows;
}

// row -= f * pivot, skipping the pivot column itself (caller clears it).
void axpy_row(Row& row, const Scalar& f, const Row& pivot, size_t pivot_col) {
  for (const auto& [c, v] : pivot) {
    if (c == pivot_col) continue;
    auto it = row.find(c);
    if (it == row.end()) {
      Scalar nv = -(f * v);
      if (!nv.is_zero()) row.emplace(c, std::move(nv));
    } else {
      it->second -= f * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
  row.erase(pivot_col);
}

// Forward elimination on the row list; returns pivot (row, col) pairs.
// Pivot rows keep their scaled content; eliminated entries vanish exactly.
std::vector<std::pair<size_t, size_t>> eliminate(std::vector<Row>& rows, size_t cols,
                                                 bool parallel) {
  std::vector<std::pair<size_t, size_t>> pivots;
  std::vector<bool> used(rows.size(), false);
  for (size_t col = 0; col < cols; ++col) {
    // Sparsest candidate row keeps fill-in low on the monomial-heavy
    // matrices this engine mostly sees.
    size_t best = rows.size();
    for (size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || !rows[r].count(col)) continue;
      if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == rows.size()) continue;
    used[best] = true;
    pivots.emplace_back(best, col);
    const Scalar inv_p = inverse(rows[best].at(col));
    for (auto& [c, v] : rows[best]) v *= inv_p;

    std::vector<size_t> targets;
    for (size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && rows[r].count(col)) targets.push_back(r);
    const Row& pivot_row = rows[best];
#ifdef _OPENMP
    if (parallel && targets.size() > 8) {
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(targets.size()); ++i) {
        size_t r = targets[static_cast<size_t>(i)];
        Scalar f = rows[r].at(col);
        axpy_row(rows[r], f, pivot_row, col);
      }
    } else
#endif
    {
      (void)parallel;
      for (size_t r : targets) {
        Scalar f = rows[r].at(col);
        axpy_row(rows[r], f, pivot_row, col);
      }
    }
  }
  return pivots;
}

}  // namespace

size_t SparseMatrix::rank_impl(bool parallel) const {
  auto rows = to_rows(*this);
  return eliminate(rows, cols_, parallel).size();
}

size_t SparseMatrix::rank() const { return rank_impl(true); }
size_t SparseMatrix::rank_serial() const { return rank_impl(false); }

std::optional<SparseMatrix> SparseMatrix::inverse_impl(bool parallel) const {
  if (rows_ != cols_) return std::nullopt;
  const size_t n = rows_;
  // Augment each row with the identity block at columns n..2n.
  auto rows = to_rows(*this);
  for (size_t r = 0; r < n; ++r) rows[r][n + r] = Scalar::one();
  auto pivots = eliminate(rows, n, parallel);
  if (pivots.size() != n) return std::nullopt;

  // Back-substitution: clear above each pivot, in reverse pivot order.
  std::sort(pivots.begin(), pivots.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<size_t> row_of_col(n);
  for (const auto& [r, c] : pivots) row_of_col[c] = r;
  for (const auto& [pr, pc] : pivots) {
    const Row pivot_row = rows[pr];
    std::vector<size_t> targets;
    for (size_t r = 0; r < n; ++r)
      if (r != pr && rows[r].count(pc)) targets.push_back(r);
#ifdef _OPENMP
    if (parallel && targets.size() > 8) {
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(targets.size()); ++i) {
        size_t r = targets[static_cast<size_t>(i)];
        Scalar f = rows[r].at(pc);
        axpy_row(rows[r], f, pivot_row, pc);
      }
    } else
#endif
    {
      for (size_t r : targets) {
        Scalar f = rows[r].at(pc);
        axpy_row(rows[r], f, pivot_row, pc);
      }
    }
  }

  SparseMatrix out(n, n);
  for (const auto& [pr, pc] : pivots)
    for (const auto& [c, v] : rows[pr])
      if (c >= n) out.set(pc, c - n, v);
  return out;
}

std::optional<SparseMatrix> SparseMatrix::inverse() const { return inverse_impl(true); }
std::optional<SparseMatrix> SparseMatrix::inverse_serial() const { return inverse_impl(false); }

namespace {

SparseMatrix materialize_impl(const LinOp& f, bool parallel) {
  auto in_words = enumerate_words(f.in_shape());
  auto out_dim = shape_dimension(f.out_shape());
  if (!out_dim) throw ShapeMismatch("materialize: output shape not enumerable");
  SparseMatrix m(*out_dim, in_words.size());
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long j = 0; j < static_cast<long long>(in_words.size()); ++j) {
      Vec img = f.apply_basis(in_words[static_cast<size_t>(j)]);
      auto& col = m.column_mut(static_cast<size_t>(j));
      for (const auto& [w, c] : img.support()) col[word_index(f.out_shape(), w)] = c;
    }
    return m;
  }
#endif
  (void)parallel;
  for (size_t j = 0; j < in_words.size(); ++j) {
    Vec img = f.apply_basis(in_words[j]);
    auto& col = m.column_mut(j);
    for (const auto& [w, c] : img.support()) col[word_index(f.out_shape(), w)] = c;
  }
  return m;
}

}  // namespace

SparseMatrix materialize(const LinOp& f) { return materialize_impl(f, true); }
SparseMatrix materialize_serial(const LinOp& f) { return materialize_impl(f, false); }

}  // namespace bicross
