#ifndef COCYCLE_COHOMOLOGY_HPP
#define COCYCLE_COHOMOLOGY_HPP

// Windowed dimensions of H^q_(d)(L, M).
//
// Coefficients are truncated to an inner window N and an outer window M >= N (a
// coefficient is in a window when its argument indices and its value degree are).
// Cocycle conditions are imposed on every (q+1)-tuple whose expansion only refers
// to coefficients inside M, and Z is reported as the projection of those solutions
// onto the window-N coordinates:
//
//   dimZ = n_inner - (rank A - rank A_outer)
//
// where A_outer is A restricted to the columns outside N. B is spanned by the
// coboundaries of (q-1)-cochain basis elements inside M, restricted to window N.
// Each generator is checked against every condition row on all window-M
// coordinates; this holds exactly because delta delta = 0.
//
// The numbers are windowed estimates. stabilization_scan looks for agreement
// across a ladder of windows.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cocycle/cochain.hpp"
#include "cocycle/sparse_matrix.hpp"

namespace cocycle {

struct WindowConfig {
  std::int64_t N = 1;
  std::int64_t M = 2;

  WindowConfig() = default;
  /// Throws std::invalid_argument unless 1 <= N <= M.
  WindowConfig(std::int64_t n, std::int64_t m);
  /// M = 2N.
  static WindowConfig standard(std::int64_t n) { return {n, 2 * n}; }
};

struct CohomologySetup {
  LieAlgebra algebra = LieAlgebra::witt();
  ModuleTag module = ModuleTag::TrivialK;
  int q = 0;
  std::int64_t d = 0;
  WindowConfig window;

  CochainSpace space() const { return {algebra, module, q, d}; }
  /// Throws std::invalid_argument for q outside 0..3.
  void validate() const;
};

struct ConditionRow {
  CochainKey tuple;
  ModuleBasis component;
};

struct ConditionSystem {
  /// Window-N coefficients first, then the rest of window M; canonical order in each.
  std::vector<CoefficientId> columns;
  std::size_t n_inner = 0;
  std::vector<ConditionRow> rows;
  RationalSparseMatrix matrix;
};

/// Columns only (rows and matrix left empty).
ConditionSystem column_layout(const CohomologySetup& setup);
ConditionSystem condition_matrix(const CohomologySetup& setup);

struct CoboundarySystem {
  std::vector<CoefficientId> sources;  // (q-1)-cochain coefficients inside window M
  /// One row per source, over the ConditionSystem columns.
  RationalSparseMatrix generators;
};

/// Empty for q = 0.
CoboundarySystem coboundary_generators(const CohomologySetup& setup, const ConditionSystem& system);
CoboundarySystem coboundary_generators(const CohomologySetup& setup);

/// Throws InclusionViolation if some generator fails a condition row.
void check_inclusion(const ConditionSystem& system, const CoboundarySystem& cob);

struct CohomologyRow {
  std::int64_t N = 0, M = 0;
  std::int64_t dimZ = 0, dimB = 0, dimH = 0;
  std::size_t columns = 0, rows = 0, sources = 0;

  friend bool operator==(const CohomologyRow&, const CohomologyRow&) = default;
};

CohomologyRow cohomology_dim(const CohomologySetup& setup);

struct CohomologyReport {
  std::string algebra;
  std::string module;
  int q = 0;
  std::int64_t d = 0;
  std::vector<CohomologyRow> ladder;
  bool stabilized = false;
  std::optional<std::int64_t> stable_dim;
};

/// How many trailing rungs must agree.
inline constexpr std::size_t kStableRungs = 3;

/// Runs cohomology_dim per rung (setup.window is ignored).
CohomologyReport stabilization_scan(const CohomologySetup& setup, const std::vector<WindowConfig>& ladder);

/// Rungs N = first..last with M = 2N.
std::vector<WindowConfig> standard_ladder(std::int64_t first, std::int64_t last);

struct SequenceCheck {
  std::string name;
  CohomologyReport lhs, rhs;
  bool agree = false;  // both stabilized to the same dimension
};

struct CrosscheckReport {
  std::vector<SequenceCheck> checks;
  bool all_agree = false;
};

/// dim H^3(V,K) vs dim H^3(V,V), and dim H^k(V,W) vs dim H^k(W,W) for k = 1, 2, 3.
CrosscheckReport crosscheck_sequences(const std::vector<WindowConfig>& trivial_ladder,
                                      const std::vector<WindowConfig>& adjoint_ladder);

std::string to_json(const CohomologyReport& report, int indent = 2);
std::string to_csv(const CohomologyReport& report);
std::string to_json(const CrosscheckReport& report, int indent = 2);

}  // namespace cocycle

#endif  // COCYCLE_COHOMOLOGY_HPP
