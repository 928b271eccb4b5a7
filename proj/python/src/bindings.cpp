#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "morphequiv/cli.hpp"
#include "morphequiv/errors.hpp"
#include "morphequiv/frame.hpp"
#include "morphequiv/seminorm.hpp"

namespace py = pybind11;
using namespace morphequiv;

namespace {

Field field_of(const std::string& name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw SchemaError("field must be \"real\" or \"complex\"");
}

BesselFamily family(const CMatrix& vectors, std::optional<Eigen::VectorXd> weights, const std::string& field) {
  return BesselFamily(field_of(field), vectors, weights.value_or(Eigen::VectorXd::Ones(vectors.cols())));
}

Param param_of(const std::string& name) {
  if (name == "sigma") return Param::sigma;
  if (name == "tau1") return Param::tau1;
  if (name == "tau2") return Param::tau2;
  throw SchemaError("param must be sigma, tau1 or tau2");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parametrized morphism equivalence and Bessel-family comparison";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<SchemaError>(m, "SchemaError", error);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
  py::register_exception<NotAFrame>(m, "NotAFrame", error);

  m.def("verbs", &cli::verbs);
  m.def(
      "run_cli",
      [](const std::string& verb, const std::vector<std::string>& inputs, std::uint64_t seed, const std::string& format,
         std::optional<double> tol_rank, std::optional<double> tol_psd) {
        cli::RunConfig cfg;
        cfg.verb = verb;
        cfg.inputs = inputs;
        cfg.seed = seed;
        if (format == "json") cfg.format = cli::Format::json;
        else if (format != "text") throw SchemaError("format must be \"text\" or \"json\"");
        cfg.tol_rank = tol_rank;
        cfg.tol_psd = tol_psd;
        const cli::RunResult r = cli::run(cfg);
        return py::make_tuple(r.exit_code, r.report);
      },
      py::arg("verb"), py::arg("inputs"), py::arg("seed") = 0, py::arg("format") = "json",
      py::arg("tol_rank") = py::none(), py::arg("tol_psd") = py::none(),
      "Run one CLI verb; returns (exit_code, report).");

  m.def(
      "frame_operator",
      [](const CMatrix& vectors, std::optional<Eigen::VectorXd> weights, const std::string& field) {
        return frame_operator(family(vectors, std::move(weights), field)).matrix();
      },
      py::arg("vectors"), py::arg("weights") = py::none(), py::arg("field") = "complex",
      "Frame operator of the family whose columns are `vectors`.");

  m.def(
      "frame_bounds",
      [](const CMatrix& vectors, std::optional<Eigen::VectorXd> weights, const std::string& field) {
        const FrameBounds b = is_frame(family(vectors, std::move(weights), field));
        return py::make_tuple(b.is_frame, b.lower, b.upper);
      },
      py::arg("vectors"), py::arg("weights") = py::none(), py::arg("field") = "complex",
      "Returns (is_frame, lower, upper).");

  m.def(
      "rho",
      [](const CMatrix& p, const CVector& x) { return rho_eval(RhoForm(p), x); }, py::arg("p"), py::arg("x"));

  m.def(
      "asymp_compare",
      [](const CMatrix& a, const CMatrix& b) {
        const AsympVerdict v = asymp_compare(RhoForm(a), RhoForm(b));
        py::dict out;
        out["equivalent"] = v.equivalent;
        if (v.equivalent) {
          out["k1"] = v.k1;
          out["k2"] = v.k2;
          out["argmin"] = v.argmin;
          out["argmax"] = v.argmax;
        } else {
          out["reason"] = v.reason;
          out["separating"] = v.separating;
        }
        return out;
      },
      py::arg("a"), py::arg("b"), "Optimal K1, K2 with K1 rho_a <= rho_b <= K2 rho_a, or the kernel mismatch.");

  m.def(
      "eval_seminorm",
      [](double scale, const CMatrix& op, const CVector& x) { return eval_seminorm(SeminormRep(scale, op), x); },
      py::arg("scale"), py::arg("op"), py::arg("x"));

  m.def(
      "apply_param",
      [](const std::string& which, const CMatrix& mat, double scale, const CMatrix& op) {
        const SeminormRep r = apply_param(param_of(which), mat, SeminormRep(scale, op));
        return py::make_tuple(r.scale, r.op);
      },
      py::arg("which"), py::arg("m"), py::arg("scale"), py::arg("op"), "Returns (scale, op) of the image seminorm.");
}
