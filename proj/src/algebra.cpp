#include "cocycle/algebra.hpp"

#include "cocycle/errors.hpp"

namespace cocycle {

std::string GeneratorId::to_string() const {
  return central_ ? std::string("t") : "e_" + std::to_string(index_);
}

std::string ModuleBasis::to_string() const {
  switch (kind_) {
    case Kind::Unit:
      return "1";
    case Kind::Witt:
      return "e_" + std::to_string(index_);
    case Kind::Central:
      return "t";
  }
  return "?";
}

std::string to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Witt ? "witt" : "virasoro";
}

std::string to_string(ModuleTag tag) {
  switch (tag) {
    case ModuleTag::TrivialK:
      return "trivial";
    case ModuleTag::Adjoint:
      return "adjoint";
    case ModuleTag::WittQuotient:
      return "witt";
  }
  return "?";
}

Rational virasoro_alpha(std::int64_t n, std::int64_t m) {
  if (n + m != 0) return Rational{0};
  return make_rational(-(n * n * n - n), 12);
}

LieAlgebra LieAlgebra::witt() { return LieAlgebra{AlgebraKind::Witt, nullptr}; }
LieAlgebra LieAlgebra::virasoro() { return LieAlgebra{AlgebraKind::Virasoro, nullptr}; }

LieAlgebra LieAlgebra::witt_like(StructureConstant constant) {
  return LieAlgebra{AlgebraKind::Witt, std::make_shared<const StructureConstant>(std::move(constant))};
}

std::string LieAlgebra::name() const {
  return custom_ ? "witt-like" : to_string(kind_);
}

void LieAlgebra::require_valid(const GeneratorId& x) const {
  if (!is_valid(x))
    throw InvalidGenerator("central generator t is not an element of the " + name() + " algebra");
}

Element LieAlgebra::bracket(const GeneratorId& x, const GeneratorId& y) const {
  require_valid(x);
  require_valid(y);
  Element out;
  if (x.is_central() || y.is_central()) return out;
  const std::int64_t n = x.index();
  const std::int64_t m = y.index();
  out.add(GeneratorId::witt(n + m), custom_ ? (*custom_)(n, m) : make_rational(m - n));
  if (has_central()) out.add(GeneratorId::central(), virasoro_alpha(n, m));
  return out;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out += Rational{cx * cy} * bracket(gx, gy);
  return out;
}

std::vector<GeneratorId> LieAlgebra::generators(std::int64_t window) const {
  std::vector<GeneratorId> out;
  for (std::int64_t n = -window; n <= window; ++n) out.push_back(GeneratorId::witt(n));
  if (has_central()) out.push_back(GeneratorId::central());
  return out;
}

Module::Module(LieAlgebra algebra, ModuleTag tag) : algebra_(std::move(algebra)), tag_(tag) {}

bool Module::contains(const ModuleBasis& b) const {
  switch (tag_) {
    case ModuleTag::TrivialK:
      return b.kind() == ModuleBasis::Kind::Unit;
    case ModuleTag::Adjoint:
      return b.kind() == ModuleBasis::Kind::Witt ||
             (b.kind() == ModuleBasis::Kind::Central && algebra_.has_central());
    case ModuleTag::WittQuotient:
      return b.kind() == ModuleBasis::Kind::Witt;
  }
  return false;
}

std::vector<ModuleBasis> Module::basis_of_degree(std::int64_t n) const {
  switch (tag_) {
    case ModuleTag::TrivialK:
      if (n == 0) return {ModuleBasis::unit()};
      return {};
    case ModuleTag::Adjoint:
      if (n == 0 && algebra_.has_central()) return {ModuleBasis::witt(0), ModuleBasis::central()};
      return {ModuleBasis::witt(n)};
    case ModuleTag::WittQuotient:
      return {ModuleBasis::witt(n)};
  }
  return {};
}

ModuleElement Module::act(const GeneratorId& x, const ModuleBasis& v) const {
  algebra_.require_valid(x);
  if (!contains(v))
    throw ShapeMismatch("module element " + v.to_string() + " is not in the " + to_string(tag_) +
                        " module of the " + algebra_.name() + " algebra");
  ModuleElement out;
  switch (tag_) {
    case ModuleTag::TrivialK:
      break;
    case ModuleTag::Adjoint: {
      const GeneratorId as_generator =
          v.kind() == ModuleBasis::Kind::Central ? GeneratorId::central() : GeneratorId::witt(v.index());
      const Element bracket = algebra_.bracket(x, as_generator);
      for (const auto& [g, c] : bracket.terms())
        out.add(ModuleBasis::from_generator(g), c);
      break;
    }
    case ModuleTag::WittQuotient: {
      // t acts by zero; e_n acts through the Witt bracket, dropping the central term.
      if (x.is_central()) break;
      const Element bracket = algebra_.bracket(x, GeneratorId::witt(v.index()));
      for (const auto& [g, c] : bracket.terms())
        if (!g.is_central()) out.add(ModuleBasis::from_generator(g), c);
      break;
    }
  }
  return out;
}

ModuleElement Module::act(const GeneratorId& x, const ModuleElement& v) const {
  ModuleElement out;
  for (const auto& [b, c] : v.terms()) out += c * act(x, b);
  return out;
}

ModuleElement module_action(const LieAlgebra& algebra, ModuleTag tag, const GeneratorId& x,
                            const ModuleElement& v) {
  return Module{algebra, tag}.act(x, v);
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& algebra, std::int64_t window) {
  const auto gens = algebra.generators(window);
  std::vector<JacobiViolation> out;
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        const Element ex{x, 1}, ey{y, 1}, ez{z, 1};
        Element sum = algebra.bracket(algebra.bracket(ex, ey), ez);
        sum += algebra.bracket(algebra.bracket(ey, ez), ex);
        sum += algebra.bracket(algebra.bracket(ez, ex), ey);
        if (!sum.empty()) out.push_back({x, y, z, std::move(sum)});
      }
  return out;
}

}  // namespace cocycle
