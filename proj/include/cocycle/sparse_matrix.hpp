#ifndef COCYCLE_SPARSE_MATRIX_HPP
#define COCYCLE_SPARSE_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "cocycle/rational.hpp"

namespace cocycle {

/// Sparse vector as (index, value) pairs, ascending index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Row-major sparse matrix over Q. Immutable once built.
class RationalSparseMatrix {
 public:
  using Row = SparseVector;

  RationalSparseMatrix() = default;
  /// Zero matrix.
  RationalSparseMatrix(std::size_t rows, std::size_t cols);
  /// Rows may hold duplicate or unsorted columns; they are merged. Throws
  /// std::out_of_range on a column index >= cols.
  static RationalSparseMatrix from_rows(std::size_t cols, std::vector<Row> rows);
  static RationalSparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  std::size_t n_rows() const { return rows_.size(); }
  std::size_t n_cols() const { return cols_; }
  std::size_t nnz() const;
  const Row& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<Row>& rows() const { return rows_; }
  Rational at(std::size_t r, std::size_t c) const;

  RationalSparseMatrix transpose() const;
  /// Throws std::invalid_argument when x.size() != n_cols().
  std::vector<Rational> multiply(std::span<const Rational> x) const;
  std::vector<Rational> multiply(const SparseVector& x) const;

  friend bool operator==(const RationalSparseMatrix&, const RationalSparseMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Accumulates entries in any order; build() merges duplicates and drops zeros.
class SparseMatrixBuilder {
 public:
  SparseMatrixBuilder(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  void add(std::size_t r, std::size_t c, const Rational& value);
  std::size_t append_row(SparseVector row);
  RationalSparseMatrix build() &&;

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

/// Sorts by index, merges duplicates, drops zeros.
void normalize(SparseVector& v);

/// Matrix Market coordinate format. The field is the non-standard "rational" and
/// each entry value is written as p/q.
void write_matrix_market(std::ostream& os, const RationalSparseMatrix& m);

}  // namespace cocycle

#endif  // COCYCLE_SPARSE_MATRIX_HPP
