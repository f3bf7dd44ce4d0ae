#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>
#include <string>
#include <vector>

#include "dpllkit/dimacs.hpp"
#include "dpllkit/dpll_proof.hpp"
#include "dpllkit/oracle.hpp"
#include "dpllkit/php.hpp"
#include "dpllkit/proof_io.hpp"
#include "dpllkit/resolution.hpp"
#include "dpllkit/solver.hpp"

namespace py = pybind11;
using namespace dpllkit;

namespace {

using PyClause = std::vector<std::int64_t>;
using PyFormula = std::vector<PyClause>;

Clause to_clause(const PyClause &c) {
  std::vector<Literal> lits;
  for (auto v : c) lits.push_back(Literal::from_dimacs(v));
  return Clause::canonicalize(std::move(lits));
}

Formula to_formula(const PyFormula &f) {
  std::vector<Clause> cs;
  for (const auto &c : f) cs.push_back(to_clause(c));
  return Formula::from_clauses(std::move(cs));
}

Valuation to_valuation(const PyClause &g) {
  std::vector<Literal> lits;
  for (auto v : g) lits.push_back(Literal::from_dimacs(v));
  return Valuation::from_literals(std::move(lits));
}

PyClause from_clause(const Clause &c) {
  PyClause out;
  for (auto l : c) out.push_back(l.to_dimacs());
  return out;
}

PyFormula from_formula(const Formula &f) {
  PyFormula out;
  for (const auto &c : f) out.push_back(from_clause(c));
  return out;
}

// Model restricted to the formula's variables, as true literals.
PyClause model_literals(const Assignment &m, const Formula &f) {
  PyClause out;
  for (auto v : vars_of(f)) out.push_back(Literal(v, !m.value(v)).to_dimacs());
  return out;
}

struct PySolveResult {
  bool satisfiable = false;
  std::optional<PyClause> model;
  std::optional<DpllDerivation> proof;
};

}  // namespace

PYBIND11_MODULE(_dpllkit, m) {
  m.doc() = "Proof-producing DPLL solver (C++ core)";

  py::class_<DpllDerivation>(m, "DpllDerivation")
      .def_property_readonly("size",
                             [](const DpllDerivation &d) { return dpll_size(d); })
      .def_property_readonly(
          "rule", [](const DpllDerivation &d) { return std::string(to_string(d.rule())); })
      .def("__str__", [](const DpllDerivation &d) { return serialize_dpll(d); })
      .def("__eq__", [](const DpllDerivation &a, const DpllDerivation &b) { return a == b; });

  py::class_<ResDerivation>(m, "ResDerivation")
      .def_property_readonly("size",
                             [](const ResDerivation &r) { return res_size(r); })
      .def_property_readonly(
          "conclusion", [](const ResDerivation &r) { return from_clause(r.conclusion()); })
      .def("__str__", [](const ResDerivation &r) { return serialize_res(r); })
      .def("__eq__", [](const ResDerivation &a, const ResDerivation &b) { return a == b; });

  py::class_<CheckReport>(m, "CheckReport")
      .def_property_readonly("valid", &CheckReport::valid)
      .def_property_readonly("reason",
                             [](const CheckReport &r) -> std::optional<std::string> {
                               if (r.valid()) return std::nullopt;
                               return std::string(to_string(r.failure->reason));
                             })
      .def_property_readonly("path",
                             [](const CheckReport &r) {
                               return r.valid() ? std::vector<std::size_t>{}
                                                : r.failure->path;
                             })
      .def("__bool__", &CheckReport::valid)
      .def("__str__", [](const CheckReport &r) { return describe(r); });

  py::class_<PySolveResult>(m, "SolveResult")
      .def_readonly("satisfiable", &PySolveResult::satisfiable)
      .def_readonly("model", &PySolveResult::model)
      .def_readonly("proof", &PySolveResult::proof);

  m.def(
      "parse_dimacs",
      [](const std::string &text, bool strict) {
        DimacsOptions opts;
        opts.strict = strict;
        return from_formula(parse_dimacs(text, opts).formula);
      },
      py::arg("text"), py::arg("strict") = true);
  m.def("emit_dimacs",
        [](const PyFormula &f) { return emit_dimacs(to_formula(f)); });
  m.def("gen_php", [](std::uint32_t n, std::uint32_t holes) {
    return from_formula(gen_php(PhpSpec{n, holes}));
  });

  m.def(
      "solve",
      [](const PyFormula &f, const std::string &mode, bool assert_measure) {
        Formula formula = to_formula(f);
        SolverConfig cfg;
        if (mode == "decide")
          cfg.mode = SolverMode::kDecide;
        else if (mode != "witness")
          throw py::value_error("mode must be 'witness' or 'decide'");
        cfg.assert_measure = assert_measure;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(formula, cfg);
        }
        PySolveResult out;
        out.satisfiable = r.satisfiable;
        if (r.verdict) {
          if (r.verdict->is_sat())
            out.model = model_literals(r.verdict->model(), formula);
          else
            out.proof = r.verdict->proof();
        }
        return out;
      },
      py::arg("formula"), py::arg("mode") = "witness",
      py::arg("assert_measure") = false);
  m.def("decide", [](const PyFormula &f) { return decide(to_formula(f)); });

  m.def(
      "check_dpll",
      [](const PyFormula &f, const DpllDerivation &p, const PyClause &g) {
        return check_dpll(to_valuation(g), to_formula(f), p);
      },
      py::arg("formula"), py::arg("proof"), py::arg("valuation") = PyClause{});
  m.def("check_res", [](const PyFormula &f, const ResDerivation &r) {
    return check_res(to_formula(f), r);
  });
  m.def(
      "dpll_to_res",
      [](const PyFormula &f, const DpllDerivation &p, const PyClause &g) {
        return dpll_to_res(to_valuation(g), to_formula(f), p);
      },
      py::arg("formula"), py::arg("proof"), py::arg("valuation") = PyClause{});
  m.def("refute",
        [](const PyFormula &f) -> std::variant<PyClause, ResDerivation> {
          Formula formula = to_formula(f);
          ResVerdict v = refute(formula);
          if (v.is_sat()) return model_literals(v.model(), formula);
          return v.proof();
        });
  m.def("brute_force_sat", [](const PyFormula &f) -> std::optional<PyClause> {
    Formula formula = to_formula(f);
    auto v = brute_force_sat(formula, oracle_cap_from_env());
    if (!v.satisfiable()) return std::nullopt;
    return model_literals(*v.witness, formula);
  });

  m.def("parse_dpll", [](const std::string &s) { return parse_dpll(s); });
  m.def("parse_res", [](const std::string &s) { return parse_res(s); });

  py::register_exception<DimacsError>(m, "DimacsError", PyExc_ValueError);
  py::register_exception<ProofParseError>(m, "ProofParseError", PyExc_ValueError);
  py::register_exception<InvalidDerivation>(m, "InvalidDerivation", PyExc_ValueError);
  py::register_exception<OracleCapExceeded>(m, "OracleCapExceeded", PyExc_RuntimeError);
}
