#include "cocycle/normalizer.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cocycle/coefficient_forms.hpp"
#include "cocycle/errors.hpp"
#include "cocycle/known_cocycles.hpp"

namespace cocycle {

namespace {

using G = GeneratorId;

void require_degree_zero_three_cochain(const CochainSpace& space) {
  if (space.tag() != ModuleTag::TrivialK || space.degree() != 0 || space.arity() != 3)
    throw ShapeMismatch("expected a degree-0 trivial-module 3-cochain");
}

NamedCocycle gv_for(const LieAlgebra& algebra) {
  return algebra.has_central() ? NamedCocycle::GodbillonVeyHat : NamedCocycle::GodbillonVey;
}

HomogeneousCochain restrict_to(const HomogeneousCochain& psi, std::int64_t window) {
  HomogeneousCochain out(psi.space());
  for (const auto& [id, v] : psi.coefficients())
    if (psi.space().in_window(id, window)) out.set(id, v);
  return out;
}

Rational value_at(const CoefficientForm& form, const HomogeneousCochain& psi) {
  return apply_form(form, psi.lookup());
}

// (k+1)k(k-1)/6
Rational profile_factor(std::int64_t k) { return make_rational((k + 1) * k * (k - 1), 6); }

std::string triple_string(const std::array<std::int64_t, 3>& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

}  // namespace

Rational gv_coefficient(const HomogeneousCochain& psi) {
  require_degree_zero_three_cochain(psi.space());
  return psi.evaluate({G::witt(-1), G::witt(1), G::witt(0)}).coefficient(ModuleBasis::unit()) / 2;
}

HomogeneousCochain subtract_gv(const HomogeneousCochain& psi, std::int64_t window) {
  const Rational lambda = gv_coefficient(psi);
  return subtract(restrict_to(psi, window),
                  scale(materialize(gv_for(psi.space().algebra()), window), lambda));
}

HomogeneousCochain build_normalizing_cochain(const HomogeneousCochain& psi_prime, std::int64_t N) {
  require_degree_zero_three_cochain(psi_prime.space());
  if (N < 3) throw RecursionGap("the normalizing cochain needs N >= 3");
  if (!is_zero(gv_coefficient(psi_prime)))
    throw ProfileViolation("psi'(e_-1,e_1,e_0) must vanish before normalizing");

  HomogeneousCochain phi(psi_prime.space().with_arity(2));
  if (psi_prime.space().algebra().has_central())
    phi.set(std::vector{G::witt(0), G::central()}, value_at(c_coefficient(-1, 1), psi_prime) / 2);

  Rational prev = 0;  // phi_{2,-2}
  for (std::int64_t i = 2; i < N; ++i) {
    const Rational level_one = value_at(psi_coefficient(i, -1 - i, 1), psi_prime);
    const Rational next = (level_one + Rational{make_rational(2 + i)} * prev) / make_rational(i - 1);
    phi.set(std::vector{G::witt(i + 1), G::witt(-(i + 1))}, next);
    prev = next;
  }
  return phi;
}

bool is_normalized(const HomogeneousCochain& psi, std::int64_t N) {
  for (const auto& [id, v] : psi.coefficients()) {
    if (!psi.space().in_window(id, N)) continue;
    const auto& w = id.key.witt;
    if (std::find(w.begin(), w.end(), 1) != w.end()) return false;
  }
  return true;
}

ProfileCheck central_profile_check(const HomogeneousCochain& psi, std::int64_t N) {
  require_degree_zero_three_cochain(psi.space());
  if (!is_normalized(psi, N)) throw ProfileViolation("cocycle is not normalized (level-one or c_{-1,1} nonzero)");
  ProfileCheck out;
  out.checked_up_to = N;
  if (!psi.space().algebra().has_central()) return out;
  out.c2m2 = value_at(c_coefficient(2, -2), psi);
  for (std::int64_t k = 1; k <= N; ++k) {
    const Rational ck = value_at(c_coefficient(k, -k), psi);
    if (ck != profile_factor(k) * out.c2m2)
      throw ProfileViolation("c_{" + std::to_string(k) + "," + std::to_string(-k) + "} = " +
                             to_fraction_string(ck) + " breaks the profile with c_{2,-2} = " +
                             to_fraction_string(out.c2m2));
  }
  return out;
}

SeedForm& SeedForm::operator+=(const SeedForm& o) {
  psi_m220 += o.psi_m220;
  c2m2 += o.c2m2;
  return *this;
}

Rational evaluate(const SeedForm& form, const Seeds& seeds) {
  return form.psi_m220 * seeds.psi_m220 + form.c2m2 * seeds.c2m2;
}

std::string to_string(const SeedForm& form) {
  std::string out;
  if (!is_zero(form.psi_m220)) out = to_fraction_string(form.psi_m220) + "*psi(-2,2,0)";
  if (!is_zero(form.c2m2)) {
    if (!out.empty()) out += " + ";
    out += to_fraction_string(form.c2m2) + "*c(2,-2)";
  }
  return out.empty() ? "0" : out;
}

std::vector<RecursionStep> recursion_steps(std::int64_t N) {
  std::vector<RecursionStep> steps;
  auto push = [&](std::array<std::int64_t, 4> tuple, std::array<std::int64_t, 3> target, int level) {
    for (auto x : target)
      if (x < -N || x > N) return;
    std::sort(target.begin(), target.end());
    steps.push_back({tuple, target, level});
  };
  for (std::int64_t i = 2; i <= N; ++i) push({-i - 1, i, 0, 1}, {-1 - i, 1 + i, 0}, 0);
  for (std::int64_t i = -2; i >= -N; --i) push({-i, i, -1, 1}, {1 - i, i, -1}, -1);
  for (std::int64_t i = -3; i >= -N; --i) push({-i + 1, i, -2, 1}, {2 - i, i, -2}, -2);
  for (std::int64_t i = 3; i <= N; ++i) push({-i - 1, i, 2, -1}, {-2 - i, i, 2}, 2);
  for (std::int64_t k = 2; k < N; ++k)
    for (std::int64_t i = k + 2; i <= N; ++i)
      push({-i - k - 1, i, k, 1}, {-1 - i - k, i, 1 + k}, static_cast<int>(k + 1));
  for (std::int64_t k = -2; k >= -N; --k)
    for (std::int64_t i = k - 2; i >= -N; --i)
      push({-i - k + 1, i, k, -1}, {1 - i - k, i, k - 1}, static_cast<int>(k - 1));
  return steps;
}

std::optional<SeedForm> CoefficientTable::psi_at(std::int64_t i, std::int64_t j, std::int64_t k) const {
  const auto form = psi_coefficient(i, j, k);
  if (form.empty()) return SeedForm{};
  const auto& [id, sign] = form.terms().front();
  const auto& w = id.key.witt;
  if (std::find(w.begin(), w.end(), 1) != w.end()) return SeedForm{};
  auto it = psi.find({w[0], w[1], w[2]});
  if (it == psi.end()) return std::nullopt;
  return sign * it->second;
}

SeedForm CoefficientTable::c_at(std::int64_t i, std::int64_t j) const {
  if (!algebra.has_central() || i + j != 0 || i == 0) return {};
  return i > 0 ? SeedForm{0, profile_factor(i)} : SeedForm{0, -profile_factor(-i)};
}

namespace {

// Value of a form over psi/c coefficient ids, or nullopt if some term is unknown.
std::optional<SeedForm> substitute(const CoefficientTable& table, const CoefficientForm& form,
                                   const std::optional<CoefficientId>& skip = std::nullopt,
                                   std::string* missing = nullptr) {
  SeedForm total;
  for (const auto& [id, coeff] : form.terms()) {
    if (skip && id == *skip) continue;
    const auto& w = id.key.witt;
    std::optional<SeedForm> v;
    if (id.key.central)
      v = table.c_at(w[0], w[1]);
    else
      v = table.psi_at(w[0], w[1], w[2]);
    if (!v) {
      if (missing) *missing = id.key.to_string();
      return std::nullopt;
    }
    total += coeff * *v;
  }
  return total;
}

}  // namespace

CoefficientTable propagate_recursions(const std::optional<Seeds>& seeds, std::int64_t N,
                                      const LieAlgebra& algebra) {
  if (N < 7) throw std::invalid_argument("the recursions need N >= 7");
  CoefficientTable table;
  table.algebra = algebra;
  table.window = N;
  table.seeds = seeds;
  table.psi[{-2, 0, 2}] = SeedForm{-1, 0};  // psi_{-2,2,0} in canonical order
  if (algebra.has_central())
    for (std::int64_t k = 1; k <= N; ++k) table.c[k] = table.c_at(k, -k);

  for (const auto& step : recursion_steps(N)) {
    const auto& [a, b, c, d] = step.tuple;
    const CoefficientForm form = cocycle_condition(algebra, a, b, c, d);
    const CoefficientId target{CochainKey{{step.target.begin(), step.target.end()}, false}, ValueSlot::Main};
    const Rational lead = form.coefficient(target);
    std::string missing;
    const auto rest = substitute(table, form, target, &missing);
    if (!rest)
      throw RecursionGap("step at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                         "," + std::to_string(d) + ") needs psi at (" + missing + ")");
    if (is_zero(lead))
      throw RecursionGap("step at level " + std::to_string(step.level) + " does not involve (" +
                         triple_string(step.target) + ")");
    const SeedForm value = Rational{-1 / lead} * *rest;
    auto [it, inserted] = table.psi.emplace(step.target, value);
    if (!inserted && it->second != value)
      throw std::logic_error("recursions disagree at (" + triple_string(step.target) + ")");
  }

  for (std::int64_t i = -N; i <= N; ++i)
    for (std::int64_t j = i + 1; j <= N; ++j) {
      const std::int64_t k = -i - j;
      if (k <= j || k > N || i == 1 || j == 1 || k == 1) continue;
      if (!table.psi.contains({i, j, k}))
        throw RecursionGap("psi at (" + triple_string({i, j, k}) + ") is not reached by the recursions");
    }
  return table;
}

FinalRelations verify_final_relations(const CoefficientTable& table) {
  FinalRelations out;
  const auto rel1 = substitute(table, cocycle_condition(table.algebra, -4, -3, 2, 5));
  const auto rel2 = substitute(table, cocycle_condition(table.algebra, -3, -2, 2, 3));
  if (!rel1 || !rel2) throw RecursionGap("final relations need the table filled to N >= 7");
  out.coc1 = *rel1;
  out.coc2 = *rel2;
  if (table.algebra.has_central())
    out.forces_zero = !is_zero(out.coc1.psi_m220 * out.coc2.c2m2 - out.coc1.c2m2 * out.coc2.psi_m220);
  else
    out.forces_zero = !is_zero(out.coc1.psi_m220);
  if (table.seeds)
    out.holds_at_seeds = is_zero(evaluate(out.coc1, *table.seeds)) && is_zero(evaluate(out.coc2, *table.seeds));
  return out;
}

DecompositionResult decompose(const HomogeneousCochain& psi, const WindowConfig& window) {
  require_degree_zero_three_cochain(psi.space());
  const std::int64_t N = window.N;
  if (N < 7) throw std::invalid_argument("decompose needs N >= 7");
  const LieAlgebra& algebra = psi.space().algebra();

  const CohomologySetup setup{algebra, ModuleTag::TrivialK, 3, 0, window};
  const ConditionSystem sys = condition_matrix(setup);
  std::vector<Rational> values(sys.columns.size());
  for (std::size_t c = 0; c < values.size(); ++c) values[c] = psi.coefficient(sys.columns[c]);
  const auto residuals = sys.matrix.multiply(std::span<const Rational>(values));
  for (std::size_t r = 0; r < residuals.size(); ++r)
    if (!is_zero(residuals[r]))
      throw NotACocycle("cocycle condition fails at (" + sys.rows[r].tuple.to_string() + ")");

  DecompositionResult out{gv_coefficient(psi), HomogeneousCochain(psi.space().with_arity(2)), false};
  const HomogeneousCochain psi_prime = subtract_gv(psi, window.M);
  out.phi = build_normalizing_cochain(psi_prime, N);
  const HomogeneousCochain normalized = subtract(psi_prime, coboundary(out.phi, window.M));

  Seeds seeds;
  try {
    seeds.c2m2 = central_profile_check(normalized, N).c2m2;
  } catch (const ProfileViolation& e) {
    throw ResidualNonZero(std::string("normalized remainder: ") + e.what());
  }
  seeds.psi_m220 = value_at(psi_coefficient(-2, 2, 0), normalized);
  const CoefficientTable table = propagate_recursions(seeds, N, algebra);
  for (const auto& [key, form] : table.psi)
    if (evaluate(form, seeds) != value_at(psi_coefficient(key[0], key[1], key[2]), normalized))
      throw ResidualNonZero("normalized remainder disagrees with the recursions at (" + triple_string(key) + ")");
  const FinalRelations rel = verify_final_relations(table);
  if (!rel.forces_zero || !rel.holds_at_seeds || !is_zero(seeds.psi_m220) || !is_zero(seeds.c2m2))
    throw ResidualNonZero("seeds of the normalized remainder do not vanish: psi(-2,2,0) = " +
                          to_fraction_string(seeds.psi_m220) + ", c(2,-2) = " + to_fraction_string(seeds.c2m2));

  for (const auto& [id, v] : normalized.coefficients())
    if (normalized.space().in_window(id, N))
      throw ResidualNonZero("residual is " + to_fraction_string(v) + " at (" + id.key.to_string() + ")");
  out.residual_zero = true;
  return out;
}

std::string to_json(const DecompositionResult& result, int indent) {
  nlohmann::ordered_json j;
  j["lambda"] = to_fraction_string(result.lambda);
  auto lines = nlohmann::ordered_json::array();
  std::istringstream text(to_text(result.phi));
  for (std::string line; std::getline(text, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  j["phi"] = std::move(lines);
  j["residual_zero"] = result.residual_zero;
  return j.dump(indent);
}

}  // namespace cocycle
