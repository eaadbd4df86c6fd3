#ifndef COCYCLE_NORMALIZER_HPP
#define COCYCLE_NORMALIZER_HPP

// Splitting a degree-0 trivial-module 3-cocycle psi of W or V as
//
//   psi = lambda Psi + delta phi
//
// where Psi is the Godbillon-Vey cocycle (extended by zero on t for V).
//
// 1. lambda = psi(e_-1, e_1, e_0) / 2; every coboundary vanishes on that triple.
// 2. A 2-cochain phi (b_0 = phi(e_0,t) and phi_{i,-i}) is chosen so that
//    psi - lambda Psi - delta phi has zero "level one" coefficients psi(e_i,e_j,e_1)
//    and, for V, c_{-1,1} = 0.
// 3. On such a normalized cocycle the condition at (e_i,e_{-i-1},e_1,t) forces
//    c_{k,-k} = (k+1)k(k-1)/6 c_{2,-2}, and the conditions at a fixed family of
//    4-tuples express every psi coefficient through psi_{-2,2,0} and c_{2,-2}.
// 4. Two more conditions, at (e_-4,e_-3,e_2,e_5) and (e_-3,e_-2,e_2,e_3), force
//    both seeds to zero, so the normalized cocycle vanishes.
//
// Notation: psi_{i,j,k} = psi(e_i,e_j,e_k) and c_{i,j} = psi(e_i,e_j,t) in the
// written argument order; stored coefficients use canonical (ascending) keys.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cocycle/cochain.hpp"
#include "cocycle/cohomology.hpp"

namespace cocycle {

/// psi(e_-1, e_1, e_0) / 2. Throws ShapeMismatch unless psi is a degree-0
/// trivial-module 3-cochain.
Rational gv_coefficient(const HomogeneousCochain& psi);
/// psi - lambda Psi on the coefficients inside the window.
HomogeneousCochain subtract_gv(const HomogeneousCochain& psi, std::int64_t window);

/// phi with b_0 = c'_{-1,1}/2, phi_{0,0} = phi_{1,-1} = phi_{2,-2} = 0 and, for i >= 2,
///   phi_{i+1,-(i+1)} = -psi'_{i,-1-i,1}/(1-i) - (2+i)/(1-i) phi_{i,-i},
/// up to phi_{N,-N}. Throws RecursionGap for N < 3 and ProfileViolation when
/// psi'(e_-1,e_1,e_0) != 0.
HomogeneousCochain build_normalizing_cochain(const HomogeneousCochain& psi_prime, std::int64_t N);

/// All psi(e_i,e_j,e_1) inside the window vanish, and c_{-1,1} = 0 for V.
bool is_normalized(const HomogeneousCochain& psi, std::int64_t N);

struct ProfileCheck {
  Rational c2m2;  // c_{2,-2}; zero for W
  std::int64_t checked_up_to = 0;
};

/// Checks c_{k,-k} = (k+1)k(k-1)/6 c_{2,-2} for 1 <= k <= N. Throws ProfileViolation
/// on failure or when psi is not normalized.
ProfileCheck central_profile_check(const HomogeneousCochain& psi, std::int64_t N);

/// a psi_{-2,2,0} + b c_{2,-2}.
struct SeedForm {
  Rational psi_m220;
  Rational c2m2;

  bool is_zero() const { return cocycle::is_zero(psi_m220) && cocycle::is_zero(c2m2); }
  SeedForm& operator+=(const SeedForm& o);
  friend SeedForm operator*(const Rational& s, const SeedForm& f) { return {s * f.psi_m220, s * f.c2m2}; }
  friend bool operator==(const SeedForm&, const SeedForm&) = default;
};

struct Seeds {
  Rational psi_m220;
  Rational c2m2;
};

Rational evaluate(const SeedForm& form, const Seeds& seeds);
/// "a*psi(-2,2,0) + b*c(2,-2)", omitting zero terms ("0" if both are).
std::string to_string(const SeedForm& form);

struct RecursionStep {
  std::array<std::int64_t, 4> tuple;   // condition (delta psi)(e_a,e_b,e_c,e_d) = 0
  std::array<std::int64_t, 3> target;  // canonical key it is solved for
  int level = 0;
};

/// The fill order: level 0, -1, -2, +2, then +k+1 for k >= 2 and k-1 for k <= -2.
/// Steps whose target leaves the window are omitted.
std::vector<RecursionStep> recursion_steps(std::int64_t N);

struct CoefficientTable {
  LieAlgebra algebra = LieAlgebra::virasoro();
  std::int64_t window = 0;
  /// Canonical ascending zero-sum triples (none containing 1) -> value of psi there.
  std::map<std::array<std::int64_t, 3>, SeedForm> psi;
  /// k >= 1 -> c_{k,-k}.
  std::map<std::int64_t, SeedForm> c;
  /// nullopt for a purely symbolic table.
  std::optional<Seeds> seeds;

  /// psi_{i,j,k} in the written order; nullopt when outside the table.
  std::optional<SeedForm> psi_at(std::int64_t i, std::int64_t j, std::int64_t k) const;
  /// c_{i,j} in the written order.
  SeedForm c_at(std::int64_t i, std::int64_t j) const;
};

/// Runs recursion_steps(N) from psi_{-2,2,0} and c_{2,-2}. The level-one
/// coefficients are taken as zero. Throws std::invalid_argument for N < 7 and
/// RecursionGap when a step refers to a coefficient that is not yet known.
CoefficientTable propagate_recursions(const std::optional<Seeds>& seeds, std::int64_t N,
                                      const LieAlgebra& algebra = LieAlgebra::virasoro());

struct FinalRelations {
  SeedForm coc1;  // (delta psi)(e_-4,e_-3,e_2,e_5) after substitution
  SeedForm coc2;  // (delta psi)(e_-3,e_-2,e_2,e_3)
  bool forces_zero = false;
  /// Both relations evaluate to zero at the table's seeds (true for symbolic tables).
  bool holds_at_seeds = true;
};

/// For W only coc1 counts (c is absent); for V the two relations together.
FinalRelations verify_final_relations(const CoefficientTable& table);

struct DecompositionResult {
  Rational lambda;
  HomogeneousCochain phi;
  bool residual_zero = false;
};

/// psi is read on window M; the cocycle condition is checked on every tuple whose
/// expansion stays inside M and the residual psi - lambda Psi - delta phi on window
/// N (N >= 7). Throws NotACocycle or ResidualNonZero.
DecompositionResult decompose(const HomogeneousCochain& psi, const WindowConfig& window);

/// {"lambda": "p/q", "phi": [lines], "residual_zero": bool}
std::string to_json(const DecompositionResult& result, int indent = 2);

}  // namespace cocycle

#endif  // COCYCLE_NORMALIZER_HPP
