#include "cocycle/known_cocycles.hpp"

#include <stdexcept>

#include "cocycle/cohomology.hpp"
#include "cocycle/errors.hpp"
#include "cocycle/linsolve.hpp"

namespace cocycle {

std::string to_string(NamedCocycle c) {
  switch (c) {
    case NamedCocycle::VirasoroAlpha:
      return "alpha";
    case NamedCocycle::GodbillonVey:
      return "gv";
    case NamedCocycle::GodbillonVeyHat:
      return "gv-hat";
  }
  return "?";
}

NamedCocycle parse_named_cocycle(std::string_view name) {
  if (name == "alpha" || name == "VirasoroAlpha") return NamedCocycle::VirasoroAlpha;
  if (name == "gv" || name == "GodbillonVey") return NamedCocycle::GodbillonVey;
  if (name == "gv-hat" || name == "GodbillonVeyHat") return NamedCocycle::GodbillonVeyHat;
  throw std::invalid_argument("unknown cocycle '" + std::string(name) + "'");
}

Rational godbillon_vey(std::int64_t i, std::int64_t j, std::int64_t k) {
  if (i + j + k != 0) return 0;
  return make_rational((i - j) * (j - k) * (i - k));
}

CochainSpace cocycle_space(NamedCocycle c) {
  switch (c) {
    case NamedCocycle::VirasoroAlpha:
      return {LieAlgebra::witt(), ModuleTag::TrivialK, 2, 0};
    case NamedCocycle::GodbillonVey:
      return {LieAlgebra::witt(), ModuleTag::TrivialK, 3, 0};
    case NamedCocycle::GodbillonVeyHat:
      break;
  }
  return {LieAlgebra::virasoro(), ModuleTag::TrivialK, 3, 0};
}

Rational cocycle_coefficient(NamedCocycle c, const CoefficientId& id) {
  const auto& w = id.key.witt;
  if (id.key.central || id.slot != ValueSlot::Main) return 0;
  if (c == NamedCocycle::VirasoroAlpha) return w.size() == 2 ? virasoro_alpha(w[0], w[1]) : Rational{0};
  return w.size() == 3 ? godbillon_vey(w[0], w[1], w[2]) : Rational{0};
}

CoefficientLookup cocycle_lookup(NamedCocycle c) {
  return [c](const CoefficientId& id) { return cocycle_coefficient(c, id); };
}

HomogeneousCochain materialize(NamedCocycle c, std::int64_t window) {
  HomogeneousCochain out(cocycle_space(c));
  for (const auto& id : out.space().enumerate(window)) out.set(id, cocycle_coefficient(c, id));
  return out;
}

namespace {

CocycleVerdict check_cocycle(const CochainSpace& space, const CoefficientLookup& lookup, std::int64_t N) {
  if (N < 2) throw std::invalid_argument("verify_cocycle needs N >= 2");
  CocycleVerdict v;
  const auto tuples = space.with_arity(space.arity() + 1).enumerate(N);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (t > 0 && tuples[t].key == tuples[t - 1].key) continue;
    const auto args = tuples[t].key.arguments();
    ++v.tuples_checked;
    if (!coboundary_with(space, args, lookup).empty() && v.passed) {
      v.passed = false;
      v.first_failure = tuples[t].key;
    }
  }
  return v;
}

void require_trivial_degree_zero(const CochainSpace& space) {
  if (space.tag() != ModuleTag::TrivialK || space.degree() != 0 ||
      (space.arity() != 2 && space.arity() != 3))
    throw ShapeMismatch("non-triviality check needs a degree-0 trivial-module cochain of arity 2 or 3");
}

// The functional as (coefficient, argument tuple) pairs.
std::vector<std::pair<int, std::vector<GeneratorId>>> functional_terms(int arity) {
  using G = GeneratorId;
  if (arity == 3) return {{1, {G::witt(-1), G::witt(1), G::witt(0)}}};
  return {{1, {G::witt(2), G::witt(-2)}}, {-2, {G::witt(1), G::witt(-1)}}};
}

NontrivialityVerdict check_nontrivial(const CochainSpace& space, const CoefficientLookup& lookup,
                                      std::int64_t N) {
  require_trivial_degree_zero(space);
  if (N < 2) throw std::invalid_argument("verify_nontrivial needs N >= 2");
  NontrivialityVerdict v;

  const CochainSpace source = space.with_arity(space.arity() - 1);
  CoefficientForm on_coboundaries;
  for (const auto& [weight, args] : functional_terms(space.arity())) {
    for (const auto& [basis, form] : expand_coboundary(source, args))
      on_coboundaries += Rational{weight} * form;
    v.functional_value += Rational{weight} * evaluate_with(space, args, lookup).coefficient(ModuleBasis::unit());
  }
  v.functional_kills_coboundaries = on_coboundaries.empty();

  const CohomologySetup setup{space.algebra(), space.tag(), space.arity(), space.degree(),
                              WindowConfig::standard(N)};
  const ConditionSystem columns = column_layout(setup);
  const CoboundarySystem cob = coboundary_generators(setup, columns);
  const auto by_column = cob.generators.transpose();
  std::vector<SparseVector> rows(by_column.rows().begin(), by_column.rows().begin() + columns.n_inner);
  const auto image = RationalSparseMatrix::from_rows(cob.sources.size(), std::move(rows));
  std::vector<Rational> target(columns.n_inner);
  for (std::size_t c = 0; c < columns.n_inner; ++c) target[c] = lookup(columns.columns[c]);
  v.in_windowed_image = solve_or_none(image, target).has_value();
  return v;
}

}  // namespace

CocycleVerdict verify_cocycle(NamedCocycle c, std::int64_t N) {
  return check_cocycle(cocycle_space(c), cocycle_lookup(c), N);
}

CocycleVerdict verify_cocycle(const HomogeneousCochain& c, std::int64_t N) {
  return check_cocycle(c.space(), c.lookup(), N);
}

NontrivialityVerdict verify_nontrivial(NamedCocycle c, std::int64_t N) {
  return check_nontrivial(cocycle_space(c), cocycle_lookup(c), N);
}

NontrivialityVerdict verify_nontrivial(const HomogeneousCochain& c, std::int64_t N) {
  return check_nontrivial(c.space(), c.lookup(), N);
}

}  // namespace cocycle
