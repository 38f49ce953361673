#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "altkurepa/analysis.hpp"
#include "altkurepa/errors.hpp"
#include "altkurepa/kurepa.hpp"
#include "altkurepa/seqcore.hpp"
#include "altkurepa/specfun.hpp"

namespace py = pybind11;
using namespace altkurepa;

namespace {

kurepa::EvalOptions options(double rel_tol) {
  kurepa::EvalOptions opts;
  opts.rel_tol = rel_tol;
  return opts;
}

py::tuple triple(const analysis::BoundsTriple& b) {
  return py::make_tuple(b.lower, b.center, b.upper, std::string(analysis::to_string(b.equality)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alternating Kurepa function: C++ core bindings";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", domain_error.ptr());
  py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<specfun::QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &specfun::QuadratureResult::value)
      .def_readonly("abs_err_estimate", &specfun::QuadratureResult::abs_err_estimate)
      .def_readonly("subdivisions", &specfun::QuadratureResult::subdivisions)
      .def_readonly("converged", &specfun::QuadratureResult::converged)
      .def("__repr__", [](const specfun::QuadratureResult& r) {
        return "QuadratureResult(value=" + std::to_string(r.value) +
               ", abs_err_estimate=" + std::to_string(r.abs_err_estimate) + ")";
      });

  // specfun
  m.def("gamma", &specfun::gamma, py::arg("x"));
  m.def("exp_integral_E1", &specfun::exp_integral_E1, py::arg("x"));
  m.def("ei_constant", &specfun::ei_constant);

  // seqcore
  m.def("p_eval", &seqcore::p_eval, py::arg("n"), py::arg("z"));
  m.def("p_eval_explicit", &seqcore::p_eval_explicit, py::arg("n"), py::arg("z"));
  m.def("q_eval", &seqcore::q_eval, py::arg("n"), py::arg("z"));
  m.def("q_eval_explicit", &seqcore::q_eval_explicit, py::arg("n"), py::arg("z"));
  m.def("r_eval", &seqcore::r_eval, py::arg("n"), py::arg("z"));
  m.def("r_eval_explicit", &seqcore::r_eval_explicit, py::arg("n"), py::arg("z"));
  m.def("g_eval", &seqcore::g_eval, py::arg("k"), py::arg("x"));

  // kurepa
  m.def(
      "alt_factorial",
      [](int n) {
        const std::string digits = kurepa::alt_factorial(n).str();
        return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
      },
      py::arg("n"), "Exact A(n) as a Python int.");
  m.def(
      "re_A",
      [](double x, double rel_tol) { return kurepa::re_A(kurepa::EvalPoint(x), options(rel_tol)); },
      py::arg("x"), py::arg("rel_tol") = specfun::kDefaultRelTol);
  m.def("im_A", &kurepa::im_A, py::arg("x"));
  m.def(
      "beta",
      [](double x, double rel_tol) { return kurepa::beta(kurepa::EvalPoint(x), options(rel_tol)); },
      py::arg("x"), py::arg("rel_tol") = specfun::kDefaultRelTol);
  m.def("gamma_cos", &kurepa::gamma_cos, py::arg("x"));
  m.def(
      "re_A_decomposed",
      [](double x, double rel_tol) { return kurepa::re_A_decomposed(x, options(rel_tol)); },
      py::arg("x"), py::arg("rel_tol") = specfun::kDefaultRelTol);
  m.def(
      "re_A_via_p_theorem",
      [](double x, int n, double rel_tol) {
        return kurepa::re_A_via_p_theorem(x, n, options(rel_tol));
      },
      py::arg("x"), py::arg("n"), py::arg("rel_tol") = specfun::kDefaultRelTol);
  m.def(
      "re_A_via_r_theorem",
      [](double x, int n, double rel_tol) {
        return kurepa::re_A_via_r_theorem(x, n, options(rel_tol));
      },
      py::arg("x"), py::arg("n"), py::arg("rel_tol") = specfun::kDefaultRelTol);
  m.def(
      "functional_equation_residual",
      [](double x, double rel_tol) {
        return kurepa::functional_equation_residual(x, options(rel_tol));
      },
      py::arg("x"), py::arg("rel_tol") = specfun::kDefaultRelTol);

  // analysis
  m.def("find_beta_minimum", [] {
    const auto r = analysis::find_beta_minimum();
    return py::make_tuple(r.x0, r.beta_min);
  });
  m.def("find_reA_roots", [] {
    const auto r = analysis::find_reA_roots();
    return py::make_tuple(r.x1, r.x2);
  });
  m.def("bounds_ga2", [](int k, double x) { return triple(analysis::bounds_ga2(k, x)); },
        py::arg("k"), py::arg("x"));
  m.def("bounds_ga3", [](int k, double x) { return triple(analysis::bounds_ga3(k, x)); },
        py::arg("k"), py::arg("x"));
  m.def("bounds_ga4", [](int k, double x) { return triple(analysis::bounds_ga4(k, x)); },
        py::arg("k"), py::arg("x"));
  m.def(
      "limit_scan",
      [](const std::vector<double>& xs) {
        py::list out;
        for (const auto& row : analysis::limit_scan(xs)) {
          out.append(py::make_tuple(row.x, row.ratio2, row.ratio1));
        }
        return out;
      },
      py::arg("xs"));
  m.def(
      "verify_inequality",
      [](const std::string& theorem, int k, double x_max, int samples, std::optional<double> x_min) {
        const auto id = analysis::parse_theorem(theorem);
        if (!id) throw DomainError("unknown theorem " + theorem);
        const auto rep = analysis::verify_inequality(*id, k, x_max, samples, {}, x_min);
        py::list violations;
        for (const auto& v : rep.violations) violations.append(py::make_tuple(v.x, v.what));
        py::list equality;
        for (const auto& e : rep.equality_points) {
          py::dict d;
          d["x"] = e.x;
          d["side"] = std::string(analysis::to_string(e.side));
          d["gap"] = e.gap;
          d["ok"] = e.ok;
          equality.append(d);
        }
        py::dict d;
        d["theorem"] = std::string(analysis::to_string(rep.theorem));
        d["k"] = rep.k;
        d["samples"] = rep.grid.count;
        d["violations"] = violations;
        d["equality_points"] = equality;
        d["verdict"] = rep.pass() ? "pass" : "fail";
        return d;
      },
      py::arg("theorem"), py::arg("k"), py::arg("x_max"), py::arg("samples") = 200,
      py::arg("x_min") = py::none());
}
