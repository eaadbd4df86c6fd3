#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocycle/algebra.hpp"
#include "cocycle/cochain.hpp"
#include "cocycle/cohomology.hpp"
#include "cocycle/errors.hpp"
#include "cocycle/known_cocycles.hpp"
#include "cocycle/normalizer.hpp"

namespace py = pybind11;
using namespace cocycle;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python package turns them
// into fractions.Fraction.
std::string frac(const Rational& r) { return to_fraction_string(r); }

LieAlgebra algebra_named(const std::string& name) {
  return parse_algebra(name) == AlgebraKind::Virasoro ? LieAlgebra::virasoro() : LieAlgebra::witt();
}

py::dict row_dict(const CohomologyRow& r) {
  py::dict d;
  d["N"] = r.N;
  d["M"] = r.M;
  d["dimZ"] = r.dimZ;
  d["dimB"] = r.dimB;
  d["dimH"] = r.dimH;
  d["columns"] = r.columns;
  d["rows"] = r.rows;
  return d;
}

CohomologySetup setup_of(const std::string& algebra, const std::string& module, int q, std::int64_t d) {
  CohomologySetup s;
  s.algebra = algebra_named(algebra);
  s.module = parse_module(module);
  s.q = q;
  s.d = d;
  return s;
}

py::dict form_dict(const SeedForm& f) {
  py::dict d;
  d["psi_m220"] = frac(f.psi_m220);
  d["c2m2"] = frac(f.c2m2);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Chevalley-Eilenberg cohomology of the Witt and Virasoro algebras on finite windows";

  auto error = py::register_exception<Error>(m, "CocycleError", PyExc_RuntimeError);
  py::register_exception<InvalidGenerator>(m, "InvalidGenerator", error.ptr());
  py::register_exception<ShapeMismatch>(m, "ShapeMismatch", error.ptr());
  py::register_exception<InclusionViolation>(m, "InclusionViolation", error.ptr());
  py::register_exception<RecursionGap>(m, "RecursionGap", error.ptr());
  py::register_exception<ProfileViolation>(m, "ProfileViolation", error.ptr());
  py::register_exception<NotACocycle>(m, "NotACocycle", error.ptr());
  py::register_exception<ResidualNonZero>(m, "ResidualNonZero", error.ptr());

  m.def(
      "bracket",
      [](const std::string& algebra, std::int64_t n, std::int64_t k) {
        const auto alg = algebra_named(algebra);
        py::dict out;
        const auto value = alg.bracket(GeneratorId::witt(n), GeneratorId::witt(k));
        for (const auto& [g, c] : value.terms())
          out[py::str(g.is_central() ? std::string("t") : std::to_string(g.index()))] = frac(c);
        return out;
      },
      py::arg("algebra"), py::arg("n"), py::arg("m"),
      "[e_n, e_m] as {index or 't': 'p/q'}.");

  m.def(
      "jacobi_violations",
      [](const std::string& algebra, std::int64_t window) { return check_jacobi(algebra_named(algebra), window).size(); },
      py::arg("algebra"), py::arg("window"));

  m.def(
      "cohomology_dim",
      [](const std::string& algebra, const std::string& module, int q, std::int64_t d, std::int64_t n,
         std::optional<std::int64_t> big) {
        auto s = setup_of(algebra, module, q, d);
        s.window = big ? WindowConfig(n, *big) : WindowConfig::standard(n);
        return row_dict(cohomology_dim(s));
      },
      py::arg("algebra"), py::arg("module"), py::arg("q"), py::arg("d") = 0, py::arg("n") = 6,
      py::arg("m") = py::none());

  m.def(
      "stabilization_scan",
      [](const std::string& algebra, const std::string& module, int q, std::int64_t d, std::int64_t first,
         std::int64_t last) {
        const auto report = stabilization_scan(setup_of(algebra, module, q, d), standard_ladder(first, last));
        py::dict out;
        py::list ladder;
        for (const auto& r : report.ladder) ladder.append(row_dict(r));
        out["ladder"] = ladder;
        out["stabilized"] = report.stabilized;
        out["stable_dim"] = report.stable_dim ? py::object(py::int_(*report.stable_dim)) : py::object(py::none());
        return out;
      },
      py::arg("algebra"), py::arg("module"), py::arg("q"), py::arg("d") = 0, py::arg("first") = 4,
      py::arg("last") = 8);

  m.def(
      "godbillon_vey", [](std::int64_t i, std::int64_t j, std::int64_t k) { return frac(godbillon_vey(i, j, k)); },
      py::arg("i"), py::arg("j"), py::arg("k"));

  m.def(
      "materialize", [](const std::string& name, std::int64_t window) {
        return to_text(materialize(parse_named_cocycle(name), window));
      },
      py::arg("name"), py::arg("window"), "Canonical text of a named cocycle on a window.");

  m.def(
      "coboundary", [](const std::string& text, std::int64_t window) { return to_text(coboundary(parse_cochain(text), window)); },
      py::arg("text"), py::arg("window"));

  m.def(
      "verify_cocycle",
      [](const std::string& text_or_name, std::int64_t n) {
        const auto v = text_or_name.find('\n') == std::string::npos
                           ? verify_cocycle(parse_named_cocycle(text_or_name), n)
                           : verify_cocycle(parse_cochain(text_or_name), n);
        py::dict out;
        out["passed"] = v.passed;
        out["tuples_checked"] = v.tuples_checked;
        out["first_failure"] = v.first_failure ? py::object(py::str(v.first_failure->to_string())) : py::object(py::none());
        return out;
      },
      py::arg("cocycle"), py::arg("n"), "Accepts a cocycle name (alpha, gv, gv-hat) or cochain text.");

  m.def(
      "verify_nontrivial",
      [](const std::string& text_or_name, std::int64_t n) {
        const auto v = text_or_name.find('\n') == std::string::npos
                           ? verify_nontrivial(parse_named_cocycle(text_or_name), n)
                           : verify_nontrivial(parse_cochain(text_or_name), n);
        py::dict out;
        out["nontrivial"] = v.nontrivial();
        out["agree"] = v.agree();
        out["functional_value"] = frac(v.functional_value);
        out["in_windowed_image"] = v.in_windowed_image;
        return out;
      },
      py::arg("cocycle"), py::arg("n"));

  m.def(
      "recursion_table",
      [](std::int64_t n, const std::string& algebra) {
        const auto table = propagate_recursions(std::nullopt, n, algebra_named(algebra));
        const auto rel = verify_final_relations(table);
        py::dict psi;
        for (const auto& [key, form] : table.psi) psi[py::make_tuple(key[0], key[1], key[2])] = form_dict(form);
        py::dict c;
        for (const auto& [k, form] : table.c) c[py::int_(k)] = form_dict(form);
        py::dict out;
        out["psi"] = psi;
        out["c"] = c;
        out["coc1"] = form_dict(rel.coc1);
        out["coc2"] = form_dict(rel.coc2);
        out["forces_zero"] = rel.forces_zero;
        return out;
      },
      py::arg("n") = 9, py::arg("algebra") = "virasoro",
      "Canonical keys map to coefficients of psi(-2,2,0) and c(2,-2).");

  m.def(
      "decompose",
      [](const std::string& text, std::int64_t n, std::int64_t big) {
        const auto r = decompose(parse_cochain(text), WindowConfig(n, big));
        py::dict out;
        out["lambda"] = frac(r.lambda);
        out["phi"] = to_text(r.phi);
        out["residual_zero"] = r.residual_zero;
        return out;
      },
      py::arg("text"), py::arg("n") = 9, py::arg("m") = 13,
      "psi = lambda Psi + delta phi; psi given as canonical cochain text.");
}
