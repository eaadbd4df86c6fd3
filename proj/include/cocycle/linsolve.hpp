#ifndef COCYCLE_LINSOLVE_HPP
#define COCYCLE_LINSOLVE_HPP

// Exact rank, kernel and solve over Q.
//
// Rows are scaled to primitive integer vectors and eliminated fraction-free:
// r <- (p/g) r - (a/g) pivot_row with g = gcd(p, a), then divided by its content.
// Pivots are chosen Markowitz-style: the active column with the fewest entries,
// then the shortest row in it, then the smallest pivot, then the lowest row index.
// Ties on column count go to the lowest column index, so output is deterministic.

#include <cstddef>
#include <optional>
#include <vector>

#include "cocycle/sparse_matrix.hpp"

namespace cocycle {

using IntegerRow = std::vector<std::pair<std::size_t, Integer>>;

struct EliminationOptions {
  /// Tier per column (empty: all columns in tier 0). All tier-0 pivots are taken
  /// before any tier-1 pivot, and so on; columns with a negative tier never pivot.
  std::vector<int> column_tier;
};

/// Result of elimination. Pivot row k has its pivot at pivot_columns[k] and no
/// entries in the pivot columns of rows before it.
struct EchelonForm {
  std::size_t n_cols = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<IntegerRow> pivot_rows;
  /// Number of pivots taken in each tier.
  std::vector<std::size_t> rank_by_tier;
  /// Active rows left holding only never-pivot columns.
  std::vector<IntegerRow> residual_rows;

  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm eliminate(const RationalSparseMatrix& m, const EliminationOptions& options = {});

std::size_t rank(const RationalSparseMatrix& m);

/// Basis of {x : m x = 0}, one vector per non-pivot column. Every vector is checked
/// against m before returning (std::logic_error if the check fails).
std::vector<SparseVector> kernel_basis(const RationalSparseMatrix& m);

/// Some x with m x = v, or nullopt when rank([m | v]) > rank(m). A returned x is
/// checked against m. Throws std::invalid_argument when v.size() != m.n_rows().
std::optional<std::vector<Rational>> solve_or_none(const RationalSparseMatrix& m,
                                                   const std::vector<Rational>& v);

/// Primitive integer multiple of a rational row (positive multiple).
IntegerRow to_integer_row(const SparseVector& row);

}  // namespace cocycle

#endif  // COCYCLE_LINSOLVE_HPP
