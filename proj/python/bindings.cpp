// Every function returns a JSON document as a string; the Python package
// decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "kzr/eigen.hpp"
#include "kzr/hypergeom.hpp"
#include "kzr/kzcore.hpp"
#include "kzr/kzsolve.hpp"
#include "kzr/symrep.hpp"
#include "kzr/verify.hpp"

namespace py = pybind11;
using namespace kzr;

namespace {

FrameKind parse_kind(const std::string& kind) {
  if (kind == "exact") return FrameKind::exact;
  if (kind == "numeric") return FrameKind::numeric;
  throw ParseError("frame kind must be 'exact' or 'numeric', got '" + kind + "'");
}

SolutionFrame select_frame(const std::string& which, const Rational& rho, FrameKind kind) {
  if (which == "W") return compose_W(rho, kind);
  if (which == "W1") return fundamental_W1(rho, kind);
  if (which == "W2") return fundamental_W2(rho, kind);
  throw ParseError("frame must be 'W', 'W1' or 'W2', got '" + which + "'");
}

std::string validate(const std::string& selector, int n) {
  const Representation rep = representation_from_selector(selector, n);
  ValidationReport report = validate_representation(rep);
  report.merge(check_flatness(rep));
  json j = report;
  j["passed"] = report.passed();
  return j.dump();
}

std::string rationality(const std::string& selector, int k, int n) {
  return json(integer_eigenvalue_test(build_Qk(representation_from_selector(selector, n), k))).dump();
}

std::string evaluate(const std::string& rho_text, const std::string& y_text, const std::string& z_text,
                     const std::string& which, const std::string& kind_text) {
  const Rational rho = Rational::parse(rho_text);
  const Rational y = Rational::parse(y_text);
  const Rational z = Rational::parse(z_text);
  const FrameKind kind = parse_kind(kind_text);
  const SolutionFrame frame = select_frame(which, rho, kind);
  if (kind == FrameKind::exact) return exact_and_float(frame.at(FieldScalar(y), FieldScalar(z))).dump();
  return json{{"float", frame.numeric<double>(y.to<double>(), z.to<double>())}}.dump();
}

std::string line_residual(const std::string& rho, const std::string& which, const std::string& equation,
                          const std::string& fixed) {
  const SolutionFrame frame = select_frame(which, Rational::parse(rho), FrameKind::exact);
  return json(exact_line_residual(frame, parse_equation(equation), FieldScalar(Rational::parse(fixed)))).dump();
}

std::string scalar_checks(const std::string& rho) { return json(scalar_ode_checks(Rational::parse(rho))).dump(); }

std::string fd_residual(const std::string& rho, const std::string& which, const std::string& equation, double h,
                        double tol, const std::string& kind) {
  const SolutionFrame frame = select_frame(which, Rational::parse(rho), parse_kind(kind));
  return json(fd_grid_residual(frame, parse_equation(equation), default_grid(), h, tol, precision_from_env())).dump();
}

std::string rk_check(const std::string& rho, const std::string& which, double z, double y0, double y1, double tol,
                     const std::string& kind) {
  const SolutionFrame frame = select_frame(which, Rational::parse(rho), parse_kind(kind));
  return json(rk_cross_check(frame, z, y0, y1, tol, 1e-12, precision_from_env())).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_kzr, m) {
  m.doc() = "Exact KZ-system construction, solution and verification";
  py::register_exception<Error>(m, "KzrError", PyExc_ValueError);

  m.def("representation", [](const std::string& s, int n) { return json(representation_from_selector(s, n)).dump(); },
        py::arg("selector"), py::arg("n") = 0);
  m.def("validate_representation", &validate, py::arg("selector"), py::arg("n") = 0);
  m.def("rationality", &rationality, py::arg("selector"), py::arg("k"), py::arg("n") = 0);
  m.def("hypergeometric_params", [](const std::string& rho) { return json(kz_hg_params(Rational::parse(rho))).dump(); },
        py::arg("rho"));
  m.def("frobenius_pair", [](long rho) { return json(frobenius_rational_solutions(rho)).dump(); }, py::arg("rho"));
  m.def("evaluate", &evaluate, py::arg("rho"), py::arg("y"), py::arg("z"), py::arg("frame") = "W",
        py::arg("kind") = "exact");
  m.def("exact_line_residual", &line_residual, py::arg("rho"), py::arg("frame"), py::arg("equation"),
        py::arg("fixed"));
  m.def("scalar_ode_checks", &scalar_checks, py::arg("rho"));
  m.def("fd_grid_residual", &fd_residual, py::arg("rho"), py::arg("frame"), py::arg("equation"), py::arg("h"),
        py::arg("tol"), py::arg("kind") = "exact");
  m.def("rk_cross_check", &rk_check, py::arg("rho"), py::arg("frame"), py::arg("z"), py::arg("y0"), py::arg("y1"),
        py::arg("tol"), py::arg("kind") = "exact");
  m.def("run_cli", &run_cli, py::arg("args"));
}
