#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <set>

#include "cocycle/coefficient_forms.hpp"
#include "cocycle/cohomology.hpp"
#include "cocycle/errors.hpp"
#include "cocycle/linsolve.hpp"
#include "../oracles.hpp"

using namespace cocycle;
using G = GeneratorId;

namespace {

CohomologySetup setup(LieAlgebra alg, ModuleTag tag, int q, std::int64_t d, std::int64_t n, std::int64_t m) {
  return {std::move(alg), tag, q, d, WindowConfig(n, m)};
}

CochainKey key(std::vector<std::int64_t> witt, bool central = false) { return {std::move(witt), central}; }

// Row of the condition matrix for one tuple as a coefficient form.
CoefficientForm row_form(const ConditionSystem& sys, const CochainKey& tuple) {
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    if (sys.rows[r].tuple == tuple) {
      CoefficientForm f;
      for (const auto& [c, v] : sys.matrix.row(r)) f.add(sys.columns[c], v);
      return f;
    }
  return {};
}

}  // namespace

TEST_CASE("inner columns for W, trivial, q=3, N=2") {
  const auto sys = column_layout(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 3, 0, 2, 4));
  REQUIRE(sys.n_inner == 2);
  CHECK(sys.columns[0].key == key({-2, 0, 2}));
  CHECK(sys.columns[1].key == key({-1, 0, 1}));
}

TEST_CASE("columns match a brute-force enumeration") {
  for (std::int64_t n = 2; n <= 6; ++n)
    for (std::int64_t d = -2; d <= 2; ++d)
      for (int q = 1; q <= 3; ++q) {
        const auto sys = column_layout(setup(LieAlgebra::witt(), ModuleTag::TrivialK, q, d, n, 2 * n));
        const auto inner = oracle::ascending(n, static_cast<std::size_t>(q), -d);
        REQUIRE(sys.n_inner == inner.size());
        for (std::size_t i = 0; i < inner.size(); ++i) CHECK(sys.columns[i].key.witt == inner[i]);
        const auto outer = oracle::ascending(2 * n, static_cast<std::size_t>(q), -d);
        CHECK(sys.columns.size() == outer.size());
      }
  // Virasoro adjoint: the t-coordinate of a degree-0 value follows its e_0 coordinate.
  const auto sys = column_layout(setup(LieAlgebra::virasoro(), ModuleTag::Adjoint, 1, 0, 3, 6));
  std::size_t e0 = SIZE_MAX, t = SIZE_MAX;
  for (std::size_t c = 0; c < sys.columns.size(); ++c)
    if (sys.columns[c].key == key({0})) (sys.columns[c].slot == ValueSlot::Main ? e0 : t) = c;
  CHECK(t == e0 + 1);
}

TEST_CASE("condition rows match hand expansions") {
  const auto w = condition_matrix(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 3, 0, 4, 8));
  const auto v = condition_matrix(setup(LieAlgebra::virasoro(), ModuleTag::TrivialK, 3, 0, 4, 8));
  // (e_-1, e_1, e_0, e_2) has index sum 2: no degree-0 coefficient is involved.
  CHECK(row_form(w, key({-1, 0, 1, 2})).empty());
  CHECK(cocycle_condition(LieAlgebra::witt(), -1, 1, 0, 2).empty());

  // (e_-3, e_-1, e_1, e_3), expanded by hand:
  //   2 psi_{-4,1,3} - 4 psi_{-2,-1,3} + 6 psi_{0,-1,1} + 2 psi_{0,-3,3} - 4 psi_{2,-3,1} + 2 psi_{4,-3,-1}
  // plus alpha_{-3} c_{-1,1} = 2 c_{-1,1} on V.
  CoefficientForm hand;
  auto add = [&](std::vector<std::int64_t> k, long c, bool central = false) {
    hand.add(CoefficientId{key(std::move(k), central), ValueSlot::Main}, c);
  };
  add({-4, 1, 3}, 2);
  add({-2, -1, 3}, -4);
  add({-1, 0, 1}, -6);
  add({-3, 0, 3}, -2);
  add({-3, 1, 2}, -4);
  add({-3, -1, 4}, 2);
  CHECK(row_form(w, key({-3, -1, 1, 3})) == hand);
  add({-1, 1}, 2, true);
  CHECK(row_form(v, key({-3, -1, 1, 3})) == hand);
}

TEST_CASE("t-rows of V, q=2 reproduce the central cocycle condition") {
  const auto sys = condition_matrix(setup(LieAlgebra::virasoro(), ModuleTag::TrivialK, 2, 0, 3, 6));
  int seen = 0;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    const auto& t = sys.rows[r].tuple;
    if (!t.central) continue;
    CoefficientForm f;
    for (const auto& [c, x] : sys.matrix.row(r)) f.add(sys.columns[c], x);
    // (delta b)(e_i,e_j,t) for a 2-cochain is the formula with b in place of c.
    CoefficientForm expected;
    const auto i = t.witt[0], j = t.witt[1];
    if (i != j) expected = coboundary_condition_central(i, j);
    CHECK(f == expected);
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("coboundary generators") {
  const auto s = setup(LieAlgebra::virasoro(), ModuleTag::TrivialK, 3, 0, 5, 10);
  const auto sys = condition_matrix(s);
  const auto cob = coboundary_generators(s, sys);
  std::map<CoefficientId, std::size_t> col;
  for (std::size_t c = 0; c < sys.columns.size(); ++c) col[sys.columns[c]] = c;

  auto generator = [&](const CochainKey& k) -> const SparseVector& {
    for (std::size_t i = 0; i < cob.sources.size(); ++i)
      if (cob.sources[i].key == k) return cob.generators.row(i);
    FAIL("no such source");
    static SparseVector none;
    return none;
  };
  auto coordinate = [&](const SparseVector& g, const CoefficientId& id) {
    const auto c = col.at(id);
    for (const auto& [i, v] : g)
      if (i == c) return v;
    return Rational(0);
  };

  // b_0 = 1: c_{i,-i} = -2i, i.e. canonical (-i, i, t) holds 2i.
  const auto& b0 = generator(key({0}, true));
  for (std::int64_t i = 1; i <= 10; ++i)
    CHECK(coordinate(b0, {key({-i, i}, true), ValueSlot::Main}) == make_rational(2 * i));

  // phi(e_-3, e_3) = 1 against the coboundary formula, coordinate by coordinate.
  const auto& g = generator(key({-3, 3}));
  const CoefficientId phi{key({-3, 3}), ValueSlot::Main};
  for (const auto& id : sys.columns) {
    const auto& w = id.key.witt;
    const CoefficientForm f = id.key.central ? coboundary_condition_central(w[0], w[1])
                                             : coboundary_condition(s.algebra, w[0], w[1], w[2]);
    CHECK(coordinate(g, id) == f.coefficient(phi));
  }

  // q=1, trivial module: every generator is zero.
  const auto s1 = setup(LieAlgebra::witt(), ModuleTag::TrivialK, 1, 0, 4, 8);
  CHECK(rank(coboundary_generators(s1).generators) == 0);
  CHECK(coboundary_generators(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 0, 0, 4, 8)).sources.empty());
}

TEST_CASE("coboundaries satisfy every condition row") {
  for (const auto& alg : {LieAlgebra::witt(), LieAlgebra::virasoro()})
    for (auto tag : {ModuleTag::TrivialK, ModuleTag::Adjoint})
      for (int q = 1; q <= 3; ++q)
        for (std::int64_t d = -1; d <= 1; ++d) {
          const auto s = setup(alg, tag, q, d, 3, 6);
          const auto sys = condition_matrix(s);
          CHECK_NOTHROW(check_inclusion(sys, coboundary_generators(s, sys)));
        }
}

TEST_CASE("inclusion check catches a bracket that is not a Lie bracket") {
  const auto bad = LieAlgebra::witt_like([](std::int64_t n, std::int64_t m) { return make_rational(m - n + (n == 1 ? 1 : 0) - (m == 1 ? 1 : 0)); });
  const auto s = setup(bad, ModuleTag::TrivialK, 3, 0, 3, 6);
  const auto sys = condition_matrix(s);
  CHECK_THROWS_AS(check_inclusion(sys, coboundary_generators(s, sys)), InclusionViolation);
}

TEST_CASE("dimension examples") {
  CHECK(cohomology_dim(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 0, 0, 4, 8)).dimH == 1);
  CHECK(cohomology_dim(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 1, 0, 8, 12)).dimH == 0);
  CHECK(cohomology_dim(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 2, 0, 8, 12)).dimH == 1);
  const auto row = cohomology_dim(setup(LieAlgebra::witt(), ModuleTag::TrivialK, 3, 0, 6, 12));
  CHECK(row.dimH == row.dimZ - row.dimB);
  CHECK(row.dimH == 1);
}

TEST_CASE("dimB does not decrease with M") {
  for (auto tag : {ModuleTag::TrivialK, ModuleTag::Adjoint}) {
    std::int64_t prev = -1;
    for (std::int64_t m = 4; m <= 9; ++m) {
      const auto row = cohomology_dim(setup(LieAlgebra::witt(), tag, 2, 0, 4, m));
      CHECK(row.dimB >= prev);
      prev = row.dimB;
    }
  }
}

TEST_CASE("stabilization scans") {
  auto scan = [](LieAlgebra alg, ModuleTag tag, int q, std::int64_t d, std::int64_t a, std::int64_t b) {
    return stabilization_scan({std::move(alg), tag, q, d, {}}, standard_ladder(a, b));
  };
  const auto gv = scan(LieAlgebra::witt(), ModuleTag::TrivialK, 3, 0, 4, 10);
  CHECK(gv.stabilized);
  CHECK(gv.stable_dim == 1);
  CHECK(gv.ladder.size() == 7);
  const auto adj = scan(LieAlgebra::witt(), ModuleTag::Adjoint, 3, 0, 4, 7);
  CHECK(adj.stable_dim == 0);
  const auto fuks = scan(LieAlgebra::witt(), ModuleTag::TrivialK, 2, 1, 4, 8);
  CHECK(fuks.stable_dim == 0);
  CHECK_THROWS_AS(stabilization_scan({LieAlgebra::witt(), ModuleTag::TrivialK, 1, 0, {}}, {WindowConfig(5, 10), WindowConfig(4, 8)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WindowConfig(5, 4), std::invalid_argument);
}

TEST_CASE("report formats") {
  const auto r = stabilization_scan({LieAlgebra::witt(), ModuleTag::TrivialK, 2, 0, {}}, standard_ladder(3, 5));
  const auto j = nlohmann::json::parse(to_json(r));
  for (const char* field : {"algebra", "module", "q", "d", "ladder", "stabilized", "stable_dim"}) CHECK(j.contains(field));
  CHECK(j["algebra"] == "witt");
  CHECK(j["module"] == "trivial");
  REQUIRE(j["ladder"].size() == 3);
  std::set<std::string> keys;
  for (const auto& [k, v] : j["ladder"][0].items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"N", "M", "dimZ", "dimB", "dimH"});
  CHECK(j["stable_dim"] == 1);
  const auto csv = to_csv(r);
  CHECK(csv.rfind("algebra,module,q,d,N,M,dimZ,dimB,dimH\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("small crosscheck") {
  const auto report = crosscheck_sequences(standard_ladder(3, 6), standard_ladder(3, 5));
  CHECK(report.checks.size() == 4);
  for (const auto& c : report.checks) CHECK(c.lhs.ladder.size() > 0);
  const auto j = nlohmann::json::parse(to_json(report));
  CHECK(j["checks"].size() == 4);
}
