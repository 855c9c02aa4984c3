#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schubreg/cli.hpp"
#include "schubreg/errors.hpp"
#include "schubreg/groth.hpp"
#include "schubreg/ideal.hpp"
#include "schubreg/json_io.hpp"
#include "schubreg/reg.hpp"
#include "schubreg/shapes.hpp"

namespace py = pybind11;
using namespace schubreg;

namespace {

Permutation perm(const std::string& s) { return Permutation::parse(s); }

// Python ints are arbitrary precision, so go through the decimal string.
py::object to_py(const Integer& x) {
  if (x.fits_int64()) return py::int_(x.to_int64());
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.to_string().c_str(), nullptr, 10));
}

py::list coeffs(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

// nlohmann -> Python through the json module keeps big integers exact.
py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Castelnuovo-Mumford regularity of Kazhdan-Lusztig varieties";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<FormulaInapplicable>(m, "FormulaInapplicable", PyExc_ValueError);
  py::register_exception<NotBruhatComparable>(m, "NotBruhatComparable", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

  m.def(
      "regularity",
      [](const std::string& v, const std::string& w, const std::string& method, bool verify, bool with_kl,
         int64_t budget_ms) {
        RegularityOptions opts;
        opts.verify = verify;
        opts.with_kl = with_kl;
        opts.budget.max_ms = budget_ms;
        RegularityReport r;
        {
          py::gil_scoped_release release;
          r = regularity(perm(v), perm(w), parse_method(method), opts);
        }
        return json_to_py(report_to_json(r));
      },
      py::arg("v"), py::arg("w"), py::arg("method") = "auto", py::arg("verify") = false, py::arg("with_kl") = false,
      py::arg("budget_ms") = 0, "Full report as a dict, same fields as `schubreg analyze --json`.");

  m.def(
      "regularity_formula", [](const std::string& v, const std::string& w) { return regularity_formula(perm(v), perm(w)); },
      py::arg("v"), py::arg("w"));

  m.def(
      "h_polynomial",
      [](const std::string& v, const std::string& w) {
        HilbertData h;
        {
          py::gil_scoped_release release;
          h = hilbert_data(perm(v), perm(w));
        }
        return coeffs(h.H);
      },
      py::arg("v"), py::arg("w"), "Coefficients of H_{v,w}(q), constant term first.");

  m.def(
      "kappa", [](const std::string& v, const std::string& w) { return kappa(perm(v), perm(w)).kappa.to_string(); },
      py::arg("v"), py::arg("w"));

  m.def(
      "rrw_filling", [](const std::string& v, const std::string& w) { return rrw_filling(perm(v), perm(w)).rows_bottom_up(); },
      py::arg("v"), py::arg("w"), "Rows of the filling from the bottom up.");

  m.def(
      "grothendieck", [](const std::string& u) { return grothendieck(perm(u)).to_string(); }, py::arg("u"));
  m.def(
      "groth_degree", [](const std::string& u) { return groth_degree(perm(u)); }, py::arg("u"));
  m.def(
      "vexillary_degree_formula", [](const std::string& u) { return vexillary_degree_formula(perm(u)); }, py::arg("u"));

  m.def(
      "kl_polynomial", [](const std::string& v, const std::string& w) { return coeffs(kl_polynomial(perm(v), perm(w))); },
      py::arg("v"), py::arg("w"));

  m.def(
      "kl_generators",
      [](const std::string& v, const std::string& w) {
        std::vector<std::string> out;
        for (const auto& g : kl_generators(perm(v), perm(w)).generators) out.push_back(g.to_string());
        return out;
      },
      py::arg("v"), py::arg("w"));

  m.def(
      "max_reg_scan",
      [](int n, bool covexillary_only, int threads) {
        ScanOptions opts;
        opts.restrict = covexillary_only ? ScanRestrict::CovexillaryOnly : ScanRestrict::All;
        opts.threads = threads;
        ScanResult res;
        {
          py::gil_scoped_release release;
          res = max_reg_scan(n, opts);
        }
        py::dict d;
        d["n"] = res.n;
        d["max_reg"] = res.max_reg ? py::object(py::int_(*res.max_reg)) : py::object(py::none());
        py::list maximizers;
        for (const auto& [v, w] : res.maximizers) maximizers.append(py::make_tuple(v.to_string(), w.to_string()));
        d["maximizers"] = maximizers;
        d["pairs"] = res.records.size();
        d["groebner_calls"] = res.groebner_calls;
        d["partial"] = res.partial;
        return d;
      },
      py::arg("n"), py::arg("covexillary_only") = false, py::arg("threads") = 1);

  m.def(
      "is_covexillary", [](const std::string& w) { return is_covexillary(perm(w)); }, py::arg("w"));
  m.def(
      "bruhat_leq", [](const std::string& v, const std::string& w) { return bruhat_leq(perm(v), perm(w)); }, py::arg("v"),
      py::arg("w"));
  m.def(
      "length", [](const std::string& w) { return length(perm(w)); }, py::arg("w"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "schubreg");
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
