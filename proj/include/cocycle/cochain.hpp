#ifndef COCYCLE_COCHAIN_HPP
#define COCYCLE_COCHAIN_HPP

// Homogeneous alternating cochains and the Chevalley-Eilenberg coboundary.
//
// A q-cochain is stored on canonical keys: the Witt indices of its arguments in
// strictly ascending order, plus a flag for a central argument t (placed last).
// Evaluating on any other argument order applies the permutation sign; repeated
// arguments evaluate to zero and are never stored.
//
// The value of a homogeneous degree-d cochain on arguments of total degree s lies
// in the degree s+d component of the module. That component is one-dimensional
// except for degree 0 of the adjoint Virasoro module, so each key carries one
// coefficient (ValueSlot::Main) plus, in that single case, the t-coordinate
// (ValueSlot::Central).

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cocycle/algebra.hpp"

namespace cocycle {

struct CochainKey {
  std::vector<std::int64_t> witt;  // strictly ascending
  bool central = false;

  std::size_t arity() const { return witt.size() + (central ? 1 : 0); }
  std::int64_t index_sum() const;
  std::int64_t max_abs_index() const;
  std::vector<GeneratorId> arguments() const;
  std::string to_string() const;

  friend auto operator<=>(const CochainKey&, const CochainKey&) = default;
};

enum class ValueSlot { Main, Central };

struct CoefficientId {
  CochainKey key;
  ValueSlot slot = ValueSlot::Main;

  friend auto operator<=>(const CoefficientId&, const CoefficientId&) = default;
};

struct CanonicalArguments {
  int sign;  // parity of the sorting permutation
  CochainKey key;
};

/// Sorts arguments into canonical order. nullopt when an argument repeats.
std::optional<CanonicalArguments> canonicalize(std::span<const GeneratorId> args);

/// The space C^q_(d)(L, M) of homogeneous cochains.
class CochainSpace {
 public:
  CochainSpace(LieAlgebra algebra, ModuleTag tag, int arity, std::int64_t degree);

  const LieAlgebra& algebra() const { return module_.algebra(); }
  const Module& module() const { return module_; }
  ModuleTag tag() const { return module_.tag(); }
  int arity() const { return arity_; }
  std::int64_t degree() const { return degree_; }

  CochainSpace with_arity(int arity) const { return {algebra(), tag(), arity, degree_}; }

  /// Module basis vector a coefficient multiplies; nullopt if the support law or
  /// the module rules out this (key, slot).
  std::optional<ModuleBasis> value_basis(const CoefficientId& id) const;
  bool admits(const CoefficientId& id) const;
  /// Admitted coefficients on one key, Main slot first.
  std::vector<CoefficientId> coefficients_of(const CochainKey& key) const;

  /// Both the argument indices and the value degree lie in [-window, window].
  bool in_window(const CoefficientId& id, std::int64_t window) const;
  /// Every admitted coefficient inside the window, in canonical order.
  std::vector<CoefficientId> enumerate(std::int64_t window) const;

  friend bool operator==(const CochainSpace& a, const CochainSpace& b) {
    return a.algebra() == b.algebra() && a.tag() == b.tag() && a.arity_ == b.arity_ &&
           a.degree_ == b.degree_;
  }

 private:
  Module module_;
  int arity_;
  std::int64_t degree_;
};

using CoefficientForm = LinearCombination<CoefficientId>;
using CoefficientLookup = std::function<Rational(const CoefficientId&)>;

/// (delta psi)(args) for a symbolic psi in `source`, as one linear form in the
/// coefficients of psi per output basis vector. args has length arity + 1.
std::map<ModuleBasis, CoefficientForm> expand_coboundary(const CochainSpace& source,
                                                         std::span<const GeneratorId> args);

/// psi(args) for a psi given by coefficient lookup.
ModuleElement evaluate_with(const CochainSpace& space, std::span<const GeneratorId> args,
                            const CoefficientLookup& lookup);

/// (delta psi)(args) for a psi given by coefficient lookup.
ModuleElement coboundary_with(const CochainSpace& source, std::span<const GeneratorId> args,
                              const CoefficientLookup& lookup);

/// A finitely supported homogeneous cochain.
class HomogeneousCochain {
 public:
  explicit HomogeneousCochain(CochainSpace space) : space_(std::move(space)) {}

  const CochainSpace& space() const { return space_; }
  int arity() const { return space_.arity(); }

  /// Throws ShapeMismatch if the coefficient violates the support law.
  void set(const CoefficientId& id, const Rational& value);
  /// Sets the coefficient of psi(args) along `component`, applying the argument sign.
  void set(std::span<const GeneratorId> args, const Rational& value,
           ValueSlot slot = ValueSlot::Main);
  Rational coefficient(const CoefficientId& id) const;
  const std::map<CoefficientId, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  CoefficientLookup lookup() const;

  /// Throws ShapeMismatch on wrong arity, InvalidGenerator on t outside Virasoro.
  ModuleElement evaluate(std::span<const GeneratorId> args) const;
  ModuleElement evaluate(std::initializer_list<GeneratorId> args) const {
    return evaluate(std::span<const GeneratorId>(args.begin(), args.size()));
  }

  friend bool operator==(const HomogeneousCochain& a, const HomogeneousCochain& b) {
    return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

 private:
  CochainSpace space_;
  std::map<CoefficientId, Rational> coeffs_;
};

/// Throws ShapeMismatch when the spaces differ.
HomogeneousCochain add(const HomogeneousCochain& a, const HomogeneousCochain& b);
HomogeneousCochain scale(const HomogeneousCochain& a, const Rational& r);
HomogeneousCochain subtract(const HomogeneousCochain& a, const HomogeneousCochain& b);

/// delta psi restricted to the coefficients inside `window`. Exact there, since
/// psi is finitely supported; delta psi itself usually has infinite support.
HomogeneousCochain coboundary(const HomogeneousCochain& psi, std::int64_t window);
ModuleElement coboundary_at(const HomogeneousCochain& psi, std::span<const GeneratorId> args);

/// (delta psi)(tuple) for each tuple; all zero means psi is a cocycle there.
std::vector<ModuleElement> cocycle_residuals(const HomogeneousCochain& psi,
                                             const std::vector<std::vector<GeneratorId>>& tuples);

/// Canonical text form: a "# algebra=.. module=.. q=.. d=.." header, then one line
/// per coefficient "i1 i2 ... [t] -> p/q", with " @t" appended for the t-coordinate
/// of an adjoint value. Lines are sorted by key.
std::string to_text(const HomogeneousCochain& psi);
/// Parses to_text output. Without a header, `defaults` supplies the space; argument
/// order in a line may be arbitrary (the permutation sign is applied).
HomogeneousCochain parse_cochain(std::string_view text,
                                 const std::optional<CochainSpace>& defaults = std::nullopt);

AlgebraKind parse_algebra(std::string_view name);
ModuleTag parse_module(std::string_view name);

}  // namespace cocycle

#endif  // COCYCLE_COCHAIN_HPP
