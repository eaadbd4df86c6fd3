#ifndef COCYCLE_KNOWN_COCYCLES_HPP
#define COCYCLE_KNOWN_COCYCLES_HPP

// Closed-form cocycles with trivial coefficients:
//
//   VirasoroAlpha     alpha(e_n, e_m) = -(n^3 - n)/12 delta_{n+m,0}, a 2-cocycle of W
//   GodbillonVey      Psi(e_i, e_j, e_k) = (i-j)(j-k)(i-k) delta_{i+j+k,0}, a 3-cocycle of W
//   GodbillonVeyHat   Psi extended to V by zero on any argument t
//
// Their support is infinite, so they are kept as coefficient functions and only
// materialized on a window.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cocycle/cochain.hpp"

namespace cocycle {

enum class NamedCocycle { VirasoroAlpha, GodbillonVey, GodbillonVeyHat };

std::string to_string(NamedCocycle c);
/// "alpha", "gv", "gv-hat" (or the enum spellings). Throws std::invalid_argument.
NamedCocycle parse_named_cocycle(std::string_view name);

Rational godbillon_vey(std::int64_t i, std::int64_t j, std::int64_t k);

CochainSpace cocycle_space(NamedCocycle c);
/// Coefficient of c at a canonical id of cocycle_space(c).
Rational cocycle_coefficient(NamedCocycle c, const CoefficientId& id);
CoefficientLookup cocycle_lookup(NamedCocycle c);
HomogeneousCochain materialize(NamedCocycle c, std::int64_t window);

struct CocycleVerdict {
  bool passed = true;
  std::size_t tuples_checked = 0;
  /// First tuple (canonical order) with a nonzero residual.
  std::optional<CochainKey> first_failure;
};

/// (delta c)(x) = 0 for every (q+1)-tuple x of generators inside the window,
/// t included for the Virasoro algebra. Throws std::invalid_argument for N < 2.
CocycleVerdict verify_cocycle(NamedCocycle c, std::int64_t N);
/// Same check for a finitely supported cochain (zero off its support).
CocycleVerdict verify_cocycle(const HomogeneousCochain& c, std::int64_t N);

// Non-triviality is decided twice.
//
// (a) A linear functional f on q-cochains that kills every coboundary:
//     q = 3: f(c) = c(e_-1, e_1, e_0)
//     q = 2: f(c) = c(e_2, e_-2) - 2 c(e_1, e_-1)
//     The first property is checked symbolically on the generic (q-1)-cochain.
// (b) Exact solve of delta phi = c on the window-N coefficients, with phi ranging
//     over the (q-1)-cochains inside window 2N. This covers every phi that can
//     reach a window-N coefficient.
struct NontrivialityVerdict {
  bool functional_kills_coboundaries = false;
  Rational functional_value;
  bool in_windowed_image = false;

  bool nontrivial() const {
    return functional_kills_coboundaries && !is_zero(functional_value) && !in_windowed_image;
  }
  bool agree() const { return is_zero(functional_value) == in_windowed_image; }
};

NontrivialityVerdict verify_nontrivial(NamedCocycle c, std::int64_t N);
/// c must be a degree-0 trivial-module cochain of arity 2 or 3 (ShapeMismatch otherwise).
NontrivialityVerdict verify_nontrivial(const HomogeneousCochain& c, std::int64_t N);

}  // namespace cocycle

#endif  // COCYCLE_KNOWN_COCYCLES_HPP
