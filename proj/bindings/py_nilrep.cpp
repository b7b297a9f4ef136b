#include "nilrep/bounds.hpp"
#include "nilrep/cli.hpp"
#include "nilrep/errors.hpp"
#include "nilrep/reports.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using nlohmann::json;
using namespace nilrep;

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error("ParseError", std::string(what) + ": " + e.what());
  }
}

io::AlgebraFile algebra_from_text(const std::string& text) {
  return io::parse_algebra(parse_text(text, "algebra"));
}

std::string check_json(const std::string& algebra_json) {
  return io::dump_report(reports::check_report(algebra_from_text(algebra_json)));
}

std::string build_json(const std::string& algebra_json, const std::vector<size_t>& inner,
                       const std::string& ideal, unsigned truncate,
                       const std::vector<std::vector<size_t>>& filtration) {
  io::AlgebraFile af = algebra_from_text(algebra_json);
  builder::BuildRequest req;
  req.L = af.algebra;
  if (inner.empty()) {
    for (size_t i = 0; i < af.dim; ++i) req.inner.push_back(i);
  } else {
    for (size_t v : inner) {
      if (v == 0) throw Error("Usage", "inner indices are 1-based");
      req.inner.push_back(v - 1);
    }
    std::sort(req.inner.begin(), req.inner.end());
    req.inner.erase(std::unique(req.inner.begin(), req.inner.end()), req.inner.end());
  }
  json filt_echo = "lcs";
  if (!filtration.empty()) {
    req.filtration = builder::FiltrationMode::custom;
    json terms = json::array();
    for (const auto& term : filtration) {
      std::vector<size_t> t;
      json jt = json::array();
      for (size_t v : term) {
        if (v == 0) throw Error("Usage", "filtration indices are 1-based");
        t.push_back(v - 1);
        jt.push_back(v);
      }
      req.custom_terms.push_back(std::move(t));
      terms.push_back(std::move(jt));
    }
    filt_echo = json{{"terms", terms}};
  }
  if (ideal != "auto") {
    if (ideal.rfind("m=", 0) != 0) throw Error("Usage", "ideal expects \"auto\" or \"m=<index>\"");
    std::string num = ideal.substr(2);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num == "0") {
      throw Error("Usage", "ideal m= expects a 1-based index");
    }
    req.ideal_m = std::stoull(num) - 1;
  }
  if (truncate > 0) req.truncate = truncate;
  return io::dump_report(reports::build_report(af, req, filt_echo));
}

std::string reduce_json(const std::string& module_json) {
  return io::dump_report(reports::reduce_report(io::parse_module(parse_text(module_json, "module"))));
}

std::string filiform10_json(const std::vector<std::string>& params) {
  if (params.size() != 13) {
    throw Error("Usage", "expected 13 parameters, got " + std::to_string(params.size()));
  }
  filiform10::Params p;
  for (size_t i = 0; i < 13; ++i) p.alpha[i] = rat_from_string(params[i]);
  return io::dump_report(reports::filiform10_report(p));
}

std::string bounds_json(unsigned n, long beta) {
  std::optional<unsigned> b;
  if (beta >= 0) b = static_cast<unsigned>(beta);
  return io::dump_report(reports::bounds_report(n, b));
}

} // namespace

PYBIND11_MODULE(_nilrep, m) {
  m.doc() = "exact faithful-module constructions for nilpotent Lie algebras";

  py::register_exception<Error>(m, "NilrepError");

  m.def("f", [](unsigned n, unsigned beta) { return bounds::f(n, beta).get_str(); }, py::arg("n"),
        py::arg("beta"), "f(n, beta) as a decimal string");
  m.def("check", &check_json, py::arg("algebra_json"),
        "check report (JSON text) for an algebra given as JSON text");
  m.def("build", &build_json, py::arg("algebra_json"), py::arg("inner") = std::vector<size_t>{},
        py::arg("ideal") = std::string("auto"), py::arg("truncate") = 0u,
        py::arg("filtration") = std::vector<std::vector<size_t>>{},
        "build report; inner/filtration indices are 1-based, empty means defaults");
  m.def("reduce", &reduce_json, py::arg("module_json"),
        "reduce report for a module document or build report");
  m.def("filiform10", &filiform10_json, py::arg("params"),
        "filiform10 report for 13 rational strings");
  m.def("bounds", &bounds_json, py::arg("n"), py::arg("beta") = -1L,
        "bounds report; beta < 0 omits the single-value entry");
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::string out, err;
        int code = cli::run_capture(args, out, err);
        return py::make_tuple(code, out, err);
      },
      py::arg("args"), "drive the command-line interface; returns (exit_code, stdout, stderr)");
}
