#include "cocycle/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cocycle {

void normalize(SparseVector& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
    if (!out.empty() && out.back().first == i && is_zero(out.back().second)) out.pop_back();
  }
  v = std::move(out);
}

RationalSparseMatrix::RationalSparseMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

RationalSparseMatrix RationalSparseMatrix::from_rows(std::size_t cols, std::vector<Row> rows) {
  RationalSparseMatrix m;
  m.cols_ = cols;
  for (auto& r : rows) {
    for (const auto& [c, v] : r)
      if (c >= cols) throw std::out_of_range("column " + std::to_string(c) + " outside matrix");
    normalize(r);
  }
  m.rows_ = std::move(rows);
  return m;
}

RationalSparseMatrix RationalSparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  std::vector<Row> rows;
  for (const auto& r : dense) {
    if (r.size() != cols) throw std::invalid_argument("ragged dense matrix");
    Row row;
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_zero(r[c])) row.emplace_back(c, r[c]);
    rows.push_back(std::move(row));
  }
  return from_rows(cols, std::move(rows));
}

std::size_t RationalSparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Rational RationalSparseMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != row.end() && it->first == c) ? it->second : Rational{0};
}

RationalSparseMatrix RationalSparseMatrix::transpose() const {
  RationalSparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  return t;
}

std::vector<Rational> RationalSparseMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  std::vector<Rational> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) out[r] += v * x[c];
  return out;
}

std::vector<Rational> RationalSparseMatrix::multiply(const SparseVector& x) const {
  std::vector<Rational> dense(cols_);
  for (const auto& [c, v] : x) {
    if (c >= cols_) throw std::invalid_argument("vector index outside column range");
    dense[c] += v;
  }
  return multiply(std::span<const Rational>(dense));
}

void SparseMatrixBuilder::add(std::size_t r, std::size_t c, const Rational& value) {
  if (c >= cols_) throw std::out_of_range("column " + std::to_string(c) + " outside matrix");
  if (r >= rows_.size()) rows_.resize(r + 1);
  if (!is_zero(value)) rows_[r].emplace_back(c, value);
}

std::size_t SparseMatrixBuilder::append_row(SparseVector row) {
  for (const auto& [c, v] : row)
    if (c >= cols_) throw std::out_of_range("column " + std::to_string(c) + " outside matrix");
  rows_.push_back(std::move(row));
  return rows_.size() - 1;
}

RationalSparseMatrix SparseMatrixBuilder::build() && {
  return RationalSparseMatrix::from_rows(cols_, std::move(rows_));
}

void write_matrix_market(std::ostream& os, const RationalSparseMatrix& m) {
  os << "%%MatrixMarket matrix coordinate rational general\n";
  os << "% entries are exact fractions p/q\n";
  os << m.n_rows() << ' ' << m.n_cols() << ' ' << m.nnz() << '\n';
  for (std::size_t r = 0; r < m.n_rows(); ++r)
    for (const auto& [c, v] : m.row(r)) os << r + 1 << ' ' << c + 1 << ' ' << to_fraction_string(v) << '\n';
}

}  // namespace cocycle
