#ifndef COCYCLE_ALGEBRA_HPP
#define COCYCLE_ALGEBRA_HPP

// Witt and Virasoro algebras given by structure constants, and the modules
// (trivial, adjoint, Witt quotient) their cochains take values in.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cocycle/linear_combination.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

enum class AlgebraKind { Witt, Virasoro };

/// Basis element of the Witt or Virasoro algebra: e_n, or the central element t.
/// Ordering puts every e_n (by index) before t; canonical cochain keys rely on it.
class GeneratorId {
 public:
  static GeneratorId witt(std::int64_t n) { return GeneratorId{false, n}; }
  static GeneratorId central() { return GeneratorId{true, 0}; }

  bool is_central() const { return central_; }
  std::int64_t index() const { return index_; }
  std::int64_t degree() const { return central_ ? 0 : index_; }

  std::string to_string() const;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;

 private:
  GeneratorId(bool central, std::int64_t index) : central_(central), index_(index) {}
  bool central_;
  std::int64_t index_;
};

using Element = LinearCombination<GeneratorId>;

/// The Virasoro 2-cocycle  -(n^3 - n)/12 * delta_{n+m,0}.
Rational virasoro_alpha(std::int64_t n, std::int64_t m);

class LieAlgebra {
 public:
  /// Coefficient f(n, m) in [e_n, e_m] = f(n, m) e_{n+m}.
  using StructureConstant = std::function<Rational(std::int64_t, std::int64_t)>;

  static LieAlgebra witt();
  static LieAlgebra virasoro();
  /// Witt-shaped algebra with a caller-supplied structure constant. Only used to
  /// build negative controls; nothing guarantees it is a Lie algebra.
  static LieAlgebra witt_like(StructureConstant constant);

  AlgebraKind kind() const { return kind_; }
  bool has_central() const { return kind_ == AlgebraKind::Virasoro; }
  std::string name() const;

  bool is_valid(const GeneratorId& x) const { return !x.is_central() || has_central(); }
  /// Throws InvalidGenerator.
  void require_valid(const GeneratorId& x) const;

  Element bracket(const GeneratorId& x, const GeneratorId& y) const;
  Element bracket(const Element& x, const Element& y) const;

  /// e_{-N}, ..., e_N, followed by t for the Virasoro algebra.
  std::vector<GeneratorId> generators(std::int64_t window) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.kind_ == b.kind_ && a.custom_ == b.custom_;
  }

 private:
  LieAlgebra(AlgebraKind kind, std::shared_ptr<const StructureConstant> custom)
      : kind_(kind), custom_(std::move(custom)) {}

  AlgebraKind kind_;
  std::shared_ptr<const StructureConstant> custom_;
};

enum class ModuleTag {
  TrivialK,
  Adjoint,
  /// The Witt algebra as a module over either algebra; t acts by zero.
  WittQuotient,
};

std::string to_string(AlgebraKind kind);
std::string to_string(ModuleTag tag);

/// Basis vector of a module: the unit of K, a Witt vector e_n, or t.
class ModuleBasis {
 public:
  enum class Kind { Unit, Witt, Central };

  static ModuleBasis unit() { return ModuleBasis{Kind::Unit, 0}; }
  static ModuleBasis witt(std::int64_t n) { return ModuleBasis{Kind::Witt, n}; }
  static ModuleBasis central() { return ModuleBasis{Kind::Central, 0}; }
  static ModuleBasis from_generator(const GeneratorId& g) {
    return g.is_central() ? central() : witt(g.index());
  }

  Kind kind() const { return kind_; }
  std::int64_t index() const { return index_; }
  std::int64_t degree() const { return kind_ == Kind::Witt ? index_ : 0; }
  std::string to_string() const;

  friend auto operator<=>(const ModuleBasis&, const ModuleBasis&) = default;

 private:
  ModuleBasis(Kind kind, std::int64_t index) : kind_(kind), index_(index) {}
  Kind kind_;
  std::int64_t index_;
};

using ModuleElement = LinearCombination<ModuleBasis>;

/// A graded module over one of the algebras. Every homogeneous component is
/// one-dimensional except degree 0 of the adjoint Virasoro module (e_0 and t).
class Module {
 public:
  Module(LieAlgebra algebra, ModuleTag tag);

  const LieAlgebra& algebra() const { return algebra_; }
  ModuleTag tag() const { return tag_; }

  bool contains(const ModuleBasis& b) const;
  /// Basis of the degree-n component, Witt vector first.
  std::vector<ModuleBasis> basis_of_degree(std::int64_t n) const;

  ModuleElement act(const GeneratorId& x, const ModuleBasis& v) const;
  /// Throws ShapeMismatch when v has a component outside the module.
  ModuleElement act(const GeneratorId& x, const ModuleElement& v) const;

 private:
  LieAlgebra algebra_;
  ModuleTag tag_;
};

/// x . v for the module (algebra, tag).
ModuleElement module_action(const LieAlgebra& algebra, ModuleTag tag, const GeneratorId& x,
                            const ModuleElement& v);

struct JacobiViolation {
  GeneratorId x, y, z;
  Element value;  // [[x,y],z] + [[y,z],x] + [[z,x],y]
};

/// Every ordered generator triple with |index| <= window (t included for Virasoro).
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& algebra, std::int64_t window);

}  // namespace cocycle

#endif  // COCYCLE_ALGEBRA_HPP
