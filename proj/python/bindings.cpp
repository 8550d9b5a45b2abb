#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "latwalk/automata.hpp"
#include "latwalk/bijection.hpp"
#include "latwalk/check.hpp"
#include "latwalk/formulas.hpp"
#include "latwalk/oracle.hpp"
#include "latwalk/series.hpp"

namespace py = pybind11;
using namespace latwalk;

namespace {

// Arbitrary-precision integers cross the boundary as Python ints.
py::int_ to_py(const Count& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Count>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

LanguageSpec spec_of(const std::string& language, unsigned r) { return {parse_language(language), r}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of pattern-avoiding lattice walks";

  static py::exception<Error> error(m, "LatwalkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "count",
      [](const std::string& language, unsigned r, unsigned n, const std::string& method,
         std::uint64_t budget) {
        const LanguageSpec spec = spec_of(language, r);
        if (method == "closed") return to_py(closed_form(spec, n));
        if (method == "hyper") return to_py(hyper_form(spec, n));
        if (method == "recurrence") return to_py(recurrence_seq(spec, n).values.at(n));
        if (method == "dp") return to_py(count_dp(spec, n));
        if (method == "series") return to_py(gf_series(spec, n).integer_coefficients().at(n));
        if (method == "naive") return to_py(count_naive(spec, n, budget));
        throw py::value_error("unknown method \"" + method + "\"");
      },
      py::arg("language"), py::arg("r"), py::arg("n"), py::arg("method") = "recurrence",
      py::arg("budget") = kDefaultNaiveBudget);

  m.def(
      "table",
      [](const std::string& language, unsigned r, unsigned n_max) {
        return to_py(recurrence_seq(spec_of(language, r), n_max).values);
      },
      py::arg("language"), py::arg("r"), py::arg("n_max"), "Counts for n = 0..n_max.");

  m.def(
      "series",
      [](const std::string& language, unsigned r, unsigned terms) {
        if (terms == 0) throw py::value_error("terms must be positive");
        return to_py(gf_series(spec_of(language, r), terms - 1).integer_coefficients());
      },
      py::arg("language"), py::arg("r"), py::arg("terms"));

  m.def(
      "recognize",
      [](const std::string& language, unsigned r, const std::string& word) {
        return recognize(spec_of(language, r), parse_word(word, r));
      },
      py::arg("language"), py::arg("r"), py::arg("word"));

  m.def(
      "first_step_count",
      [](const std::string& language, unsigned r, unsigned n, const std::string& step) {
        return to_py(count_dp_first_step(spec_of(language, r), n, parse_step(step, r)));
      },
      py::arg("language"), py::arg("r"), py::arg("n"), py::arg("step"));

  m.def(
      "multi_count",
      [](unsigned r, unsigned j, unsigned n, bool halfspace) {
        return to_py(count_dp_multi(r, j, n, halfspace));
      },
      py::arg("r"), py::arg("j"), py::arg("n"), py::arg("halfspace") = false);
  m.def(
      "multi_closed", [](unsigned r, unsigned j, unsigned n) { return to_py(a_multi(r, j, n)); },
      py::arg("r"), py::arg("j"), py::arg("n"));

  m.def(
      "asymptotic_ratio",
      [](const std::string& language, unsigned r, unsigned n) {
        return asymptotic_ratio(spec_of(language, r), n);
      },
      py::arg("language"), py::arg("r"), py::arg("n"));

  m.def(
      "phi", [](const std::string& word) { return format_diagonal_path(phi(parse_word(word, 1))); },
      py::arg("word"));
  m.def(
      "phi_inverse",
      [](const std::string& path) { return format_word(phi_inverse(parse_diagonal_path(path))); },
      py::arg("path"));
  m.def(
      "verify_bijection",
      [](unsigned n) {
        const BijectionReport rep = verify_bijection(n);
        py::dict out;
        out["n"] = rep.n;
        out["walks"] = rep.walks;
        out["paths"] = to_py(rep.paths);
        out["ok"] = rep.ok();
        out["failures"] = rep.failures;
        return out;
      },
      py::arg("n"));

  m.def(
      "check",
      [](unsigned r_min, unsigned r_max, unsigned n_max, const std::string& suites) {
        CheckOptions opts;
        opts.r_min = r_min;
        opts.r_max = r_max;
        opts.n_max = n_max;
        opts.suites = parse_suites(suites);
        const CheckReport report = [&] {
          py::gil_scoped_release release;
          return run_check(opts);
        }();
        return py::make_tuple(report.ok(), report_json(report));
      },
      py::arg("r_min") = 1, py::arg("r_max") = 2, py::arg("n_max") = 20,
      py::arg("suites") = "methods,ratios",
      "Runs the cross-check suites; returns (all_agree, json_report).");
}
