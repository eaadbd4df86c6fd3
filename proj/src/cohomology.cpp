#include "cocycle/cohomology.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

#include "cocycle/errors.hpp"
#include "cocycle/linsolve.hpp"
#include "cocycle/parallel.hpp"

namespace cocycle {

WindowConfig::WindowConfig(std::int64_t n, std::int64_t m) : N(n), M(m) {
  if (n < 1 || m < n)
    throw std::invalid_argument("window requires 1 <= N <= M (got N=" + std::to_string(n) +
                                ", M=" + std::to_string(m) + ")");
}

void CohomologySetup::validate() const {
  if (q < 0 || q > 3) throw std::invalid_argument("q must be in 0..3");
  if (window.N < 1 || window.M < window.N) throw std::invalid_argument("window requires 1 <= N <= M");
}

namespace {

using ColumnIndex = std::map<CoefficientId, std::size_t>;

std::vector<CochainKey> distinct_keys(const std::vector<CoefficientId>& ids) {
  std::vector<CochainKey> keys;
  for (const auto& id : ids)
    if (keys.empty() || keys.back() != id.key) keys.push_back(id.key);
  return keys;
}

}  // namespace

ConditionSystem column_layout(const CohomologySetup& setup) {
  setup.validate();
  const CochainSpace space = setup.space();
  ConditionSystem sys;
  std::vector<CoefficientId> outer;
  for (auto& id : space.enumerate(setup.window.M)) {
    if (space.in_window(id, setup.window.N))
      sys.columns.push_back(std::move(id));
    else
      outer.push_back(std::move(id));
  }
  sys.n_inner = sys.columns.size();
  sys.columns.insert(sys.columns.end(), outer.begin(), outer.end());
  sys.matrix = RationalSparseMatrix(0, sys.columns.size());
  return sys;
}

ConditionSystem condition_matrix(const CohomologySetup& setup) {
  ConditionSystem sys = column_layout(setup);
  const CochainSpace space = setup.space();
  const std::int64_t M = setup.window.M;
  ColumnIndex index;
  for (std::size_t c = 0; c < sys.columns.size(); ++c) index.emplace(sys.columns[c], c);

  const auto tuples = distinct_keys(space.with_arity(setup.q + 1).enumerate(M));
  std::vector<std::vector<std::pair<ModuleBasis, SparseVector>>> per_tuple(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t t) {
    const auto args = tuples[t].arguments();
    const auto forms = expand_coboundary(space, args);
    std::vector<std::pair<ModuleBasis, SparseVector>> rows;
    for (const auto& [basis, form] : forms) {
      SparseVector row;
      for (const auto& [id, c] : form.terms()) {
        auto it = index.find(id);
        if (it == index.end()) return;  // refers to a coefficient outside window M
        row.emplace_back(it->second, c);
      }
      rows.emplace_back(basis, std::move(row));
    }
    per_tuple[t] = std::move(rows);
  });

  std::vector<SparseVector> rows;
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (auto& [basis, row] : per_tuple[t]) {
      sys.rows.push_back({tuples[t], basis});
      rows.push_back(std::move(row));
    }
  sys.matrix = RationalSparseMatrix::from_rows(sys.columns.size(), std::move(rows));
  return sys;
}

CoboundarySystem coboundary_generators(const CohomologySetup& setup, const ConditionSystem& system) {
  setup.validate();
  CoboundarySystem out;
  if (setup.q == 0) {
    out.generators = RationalSparseMatrix(0, system.columns.size());
    return out;
  }
  const CochainSpace source = setup.space().with_arity(setup.q - 1);
  out.sources = source.enumerate(setup.window.M);
  ColumnIndex src_index;
  for (std::size_t s = 0; s < out.sources.size(); ++s) src_index.emplace(out.sources[s], s);

  // Expand delta at every column key over the whole source space, then transpose.
  std::vector<std::size_t> key_start;
  for (std::size_t c = 0; c < system.columns.size(); ++c)
    if (c == 0 || system.columns[c].key != system.columns[c - 1].key) key_start.push_back(c);
  std::vector<SparseVector> by_column(system.columns.size());
  parallel_for(key_start.size(), [&](std::size_t k) {
    const std::size_t first = key_start[k];
    const std::size_t last = k + 1 < key_start.size() ? key_start[k + 1] : system.columns.size();
    const auto args = system.columns[first].key.arguments();
    const auto forms = expand_coboundary(source, args);
    const CochainSpace target = setup.space();
    for (std::size_t c = first; c < last; ++c) {
      const auto basis = *target.value_basis(system.columns[c]);
      auto it = forms.find(basis);
      if (it == forms.end()) continue;
      SparseVector col;
      for (const auto& [sid, v] : it->second.terms()) {
        auto s = src_index.find(sid);
        if (s != src_index.end()) col.emplace_back(s->second, v);
      }
      by_column[c] = std::move(col);
    }
  });
  const auto transposed = RationalSparseMatrix::from_rows(out.sources.size(), std::move(by_column));
  out.generators = transposed.transpose();
  return out;
}

CoboundarySystem coboundary_generators(const CohomologySetup& setup) {
  return coboundary_generators(setup, condition_matrix(setup));
}

void check_inclusion(const ConditionSystem& system, const CoboundarySystem& cob) {
  if (cob.sources.empty()) return;
  const RationalSparseMatrix by_column = cob.generators.transpose();
  const auto& A = system.matrix;
  std::vector<std::size_t> bad(A.n_rows(), SIZE_MAX);
  parallel_for(A.n_rows(), [&](std::size_t r) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, a] : A.row(r))
      for (const auto& [s, g] : by_column.row(c)) acc[s] += a * g;
    for (const auto& [s, v] : acc)
      if (!is_zero(v)) {
        bad[r] = s;
        return;
      }
  });
  for (std::size_t r = 0; r < bad.size(); ++r)
    if (bad[r] != SIZE_MAX) {
      const auto& src = cob.sources[bad[r]];
      throw InclusionViolation("coboundary of the basis cochain at (" + src.key.to_string() +
                               ") fails the condition row at (" + system.rows[r].tuple.to_string() +
                               ") component " + system.rows[r].component.to_string());
    }
}

CohomologyRow cohomology_dim(const CohomologySetup& setup) {
  const ConditionSystem sys = condition_matrix(setup);
  CohomologyRow row;
  row.N = setup.window.N;
  row.M = setup.window.M;
  row.columns = sys.columns.size();
  row.rows = sys.matrix.n_rows();

  EliminationOptions tiers;
  tiers.column_tier.assign(sys.columns.size(), 1);
  for (std::size_t c = sys.n_inner; c < sys.columns.size(); ++c) tiers.column_tier[c] = 0;
  const EchelonForm e = eliminate(sys.matrix, tiers);
  const std::size_t rank_outer = e.rank_by_tier.empty() ? 0 : e.rank_by_tier[0];
  row.dimZ = static_cast<std::int64_t>(sys.n_inner) - static_cast<std::int64_t>(e.rank() - rank_outer);

  const CoboundarySystem cob = coboundary_generators(setup, sys);
  row.sources = cob.sources.size();
  check_inclusion(sys, cob);
  std::vector<SparseVector> restricted;
  restricted.reserve(cob.generators.n_rows());
  for (const auto& g : cob.generators.rows()) {
    SparseVector r;
    for (const auto& [c, v] : g)
      if (c < sys.n_inner) r.emplace_back(c, v);
    if (!r.empty()) restricted.push_back(std::move(r));
  }
  row.dimB = static_cast<std::int64_t>(rank(RationalSparseMatrix::from_rows(sys.n_inner, std::move(restricted))));
  row.dimH = row.dimZ - row.dimB;
  if (row.dimH < 0) throw InclusionViolation("windowed dim B exceeds dim Z");
  return row;
}

std::vector<WindowConfig> standard_ladder(std::int64_t first, std::int64_t last) {
  std::vector<WindowConfig> out;
  for (std::int64_t n = first; n <= last; ++n) out.push_back(WindowConfig::standard(n));
  return out;
}

CohomologyReport stabilization_scan(const CohomologySetup& setup, const std::vector<WindowConfig>& ladder) {
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i].N <= ladder[i - 1].N) throw std::invalid_argument("ladder must be increasing in N");
  CohomologyReport report;
  report.algebra = to_string(setup.algebra.kind());
  report.module = to_string(setup.module);
  report.q = setup.q;
  report.d = setup.d;
  for (const auto& w : ladder) {
    CohomologySetup rung = setup;
    rung.window = w;
    report.ladder.push_back(cohomology_dim(rung));
  }
  if (report.ladder.size() >= kStableRungs) {
    const auto tail = report.ladder.end() - kStableRungs;
    report.stabilized = std::all_of(tail, report.ladder.end(),
                                    [&](const CohomologyRow& r) { return r.dimH == tail->dimH; });
    if (report.stabilized) report.stable_dim = tail->dimH;
  }
  return report;
}

CrosscheckReport crosscheck_sequences(const std::vector<WindowConfig>& trivial_ladder,
                                      const std::vector<WindowConfig>& adjoint_ladder) {
  auto scan = [](LieAlgebra alg, ModuleTag tag, int q, const std::vector<WindowConfig>& ladder) {
    CohomologySetup s;
    s.algebra = std::move(alg);
    s.module = tag;
    s.q = q;
    return stabilization_scan(s, ladder);
  };
  auto check = [](std::string name, CohomologyReport a, CohomologyReport b) {
    SequenceCheck c{std::move(name), std::move(a), std::move(b), false};
    c.agree = c.lhs.stabilized && c.rhs.stabilized && c.lhs.stable_dim == c.rhs.stable_dim;
    return c;
  };
  const LieAlgebra W = LieAlgebra::witt(), V = LieAlgebra::virasoro();
  CrosscheckReport out;
  out.checks.push_back(check("H3(V,K) = H3(V,V)", scan(V, ModuleTag::TrivialK, 3, trivial_ladder),
                             scan(V, ModuleTag::Adjoint, 3, adjoint_ladder)));
  for (int k = 1; k <= 3; ++k)
    out.checks.push_back(check("H" + std::to_string(k) + "(V,W) = H" + std::to_string(k) + "(W,W)",
                               scan(V, ModuleTag::WittQuotient, k, adjoint_ladder),
                               scan(W, ModuleTag::Adjoint, k, adjoint_ladder)));
  out.all_agree = std::all_of(out.checks.begin(), out.checks.end(), [](const auto& c) { return c.agree; });
  return out;
}

namespace {

nlohmann::ordered_json report_json(const CohomologyReport& r) {
  nlohmann::ordered_json j;
  j["algebra"] = r.algebra;
  j["module"] = r.module;
  j["q"] = r.q;
  j["d"] = r.d;
  j["ladder"] = nlohmann::ordered_json::array();
  for (const auto& row : r.ladder)
    j["ladder"].push_back({{"N", row.N}, {"M", row.M}, {"dimZ", row.dimZ}, {"dimB", row.dimB}, {"dimH", row.dimH}});
  j["stabilized"] = r.stabilized;
  j["stable_dim"] = r.stable_dim ? nlohmann::ordered_json(*r.stable_dim) : nlohmann::ordered_json(nullptr);
  j["estimate"] = "windowed";
  return j;
}

}  // namespace

std::string to_json(const CohomologyReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_csv(const CohomologyReport& report) {
  std::ostringstream os;
  os << "algebra,module,q,d,N,M,dimZ,dimB,dimH\n";
  for (const auto& r : report.ladder)
    os << report.algebra << ',' << report.module << ',' << report.q << ',' << report.d << ',' << r.N << ','
       << r.M << ',' << r.dimZ << ',' << r.dimB << ',' << r.dimH << '\n';
  return os.str();
}

std::string to_json(const CrosscheckReport& report, int indent) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
    j["checks"].push_back({{"name", c.name}, {"lhs", report_json(c.lhs)}, {"rhs", report_json(c.rhs)}, {"agree", c.agree}});
  j["all_agree"] = report.all_agree;
  return j.dump(indent);
}

}  // namespace cocycle
