// Python bindings for the c2qhr library.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "c2qhr/suites.hpp"

namespace py = pybind11;
using namespace c2qhr;

namespace {

FSign parse_sign(const std::string& s) {
  if (s == "+") return FSign::Plus;
  if (s == "-") return FSign::Minus;
  throw Error(ErrorKind::BadArgument, "sign must be '+' or '-'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Theta functions, C2 admissible characters and minimal QHR characters";

  static py::exception<Error> error_type(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "theta", [](long j, long mm, cplx tau, cplx z, cplx t) { return eval_theta_tilde(ThetaIndex(j, mm), EvalPoint(tau, {z}, t)); },
      "theta~_{j,m}(tau, z, t)", py::arg("j"), py::arg("m"), py::arg("tau"), py::arg("z"), py::arg("t") = 0.0);
  m.def(
      "eta", [](cplx tau, cplx t) { return eval_eta_tilde(EvalPoint(tau, {}, t)); }, "eta~(tau, t)", py::arg("tau"),
      py::arg("t") = 0.0);
  m.def(
      "vartheta", [](int a, int b, cplx tau, cplx z, cplx t) { return eval_vartheta_tilde(a, b, EvalPoint(tau, {z}, t)); },
      "vartheta~_ab(tau, z, t)", py::arg("a"), py::arg("b"), py::arg("tau"), py::arg("z"), py::arg("t") = 0.0);
  m.def("gauss_sum", &gauss_sum, "gamma_m for even m", py::arg("m"));

  m.def(
      "weights",
      [](long K) {
        std::vector<std::pair<long, long>> out;
        for (const auto& w : enumerate_admissible(K)) out.emplace_back(w.n1(), w.n2());
        return out;
      },
      "Admissible (n1, n2) at level K", py::arg("K"));
  m.def(
      "character",
      [](long K, long n1, long n2, cplx tau, cplx z1, cplx z2, cplx t) {
        return character(AdmissibleWeight(K, n1, n2), EvalPoint(tau, {z1, z2}, t));
      },
      "Normalized character A'/R", py::arg("K"), py::arg("n1"), py::arg("n2"), py::arg("tau"), py::arg("z1"),
      py::arg("z2"), py::arg("t") = 0.0);
  m.def(
      "qhr_character",
      [](const std::string& sign, long K, long n1, long n2, cplx tau, cplx z, cplx t) {
        return qhr_character(parse_sign(sign), AdmissibleWeight(K, n1, n2), EvalPoint(tau, {z}, t));
      },
      "Minimal QHR character of sign '+' or '-'", py::arg("sign"), py::arg("K"), py::arg("n1"), py::arg("n2"),
      py::arg("tau"), py::arg("z"), py::arg("t") = 0.0);

  m.def("suite_names", &suite_names, "Registered suite names");
  m.def(
      "run_suite_json",
      [](const std::string& name, std::uint64_t seed, std::size_t samples, double tol) {
        return to_json(run_suite(name, seed, samples, tol));
      },
      "Run a suite and return its JSON report", py::arg("name"), py::arg("seed"), py::arg("samples"), py::arg("tol"));
  m.def("default_samples", &default_samples, py::arg("name"));
  m.def("default_tolerance", &default_tolerance, py::arg("name"));
  m.def(
      "emit_matrix",
      [](const std::string& which, long param, const std::string& format) {
        if (format != "json" && format != "csv") throw Error(ErrorKind::BadArgument, "format must be json or csv");
        return emit_matrix(which, param, format == "csv" ? MatrixFormat::Csv : MatrixFormat::Json);
      },
      "Serialise a transformation matrix", py::arg("which"), py::arg("param"), py::arg("format") = "json");
}
