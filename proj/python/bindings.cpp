#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "algser/approximant.hpp"
#include "algser/commands.hpp"
#include "algser/errors.hpp"
#include "algser/hermite_pade.hpp"
#include "algser/oracle.hpp"
#include "algser/predictor.hpp"
#include "algser/series.hpp"

namespace py = pybind11;
using namespace algser;

namespace {

PowerSeries series(const std::vector<Real>& coeffs) { return PowerSeries(coeffs); }

std::vector<std::vector<Real>> to_rows(const Matrix& a) {
  std::vector<std::vector<Real>> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.emplace_back(a.row(r).begin(), a.row(r).end());
  return rows;
}

cli::OutputFormat parse_format(const std::string& name) {
  if (name == "text") return cli::OutputFormat::Text;
  if (name == "csv") return cli::OutputFormat::Csv;
  if (name == "json") return cli::OutputFormat::Json;
  throw py::value_error("format must be text, csv or json");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hermite-Pade fits and recursive coefficient prediction";

  static py::exception<Error> error_type(m, "AlgserError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  // series_core
  m.def("truncate", [](const std::vector<Real>& s, std::size_t length) {
    return truncate(series(s), length).vector();
  }, py::arg("s"), py::arg("length"));
  m.def("mul", [](const std::vector<Real>& s, const std::vector<Real>& t, std::size_t length) {
    return mul(series(s), series(t), length).vector();
  }, py::arg("s"), py::arg("t"), py::arg("length"));
  m.def("pow", [](const std::vector<Real>& s, unsigned n, std::size_t length) {
    return pow(series(s), n, length).vector();
  }, py::arg("s"), py::arg("n"), py::arg("length"));
  m.def("poly_times_series",
        [](const std::vector<Real>& p, const std::vector<Real>& s, std::size_t length) {
          return poly_times_series(p, series(s), length).vector();
        },
        py::arg("poly"), py::arg("s"), py::arg("length"));

  // hermite_pade
  py::class_<DegreeSpec>(m, "DegreeSpec")
      .def(py::init<std::vector<int>>(), py::arg("degrees"))
      .def(py::init<int, std::vector<int>>(), py::arg("N"), py::arg("degrees"))
      .def_property_readonly("N", &DegreeSpec::N)
      .def_property_readonly("degrees", &DegreeSpec::degrees)
      .def("__repr__", [](const DegreeSpec& s) { return "DegreeSpec(" + s.describe() + ")"; });

  py::class_<PolynomialSet>(m, "PolynomialSet")
      .def(py::init<std::vector<std::vector<Real>>>(), py::arg("polys"))
      .def_property_readonly("N", &PolynomialSet::N)
      .def_property_readonly("polys", &PolynomialSet::polys)
      .def_property_readonly("normalization", [](const PolynomialSet& s) {
        return py::make_tuple(s.normalization().n, s.normalization().j);
      })
      .def("rescaled_to", [](const PolynomialSet& s, int n, int j) {
        return s.rescaled_to({n, j});
      }, py::arg("n"), py::arg("j"));

  m.def("required_input_length", &required_input_length, py::arg("spec"));
  m.def("build_system", [](const std::vector<Real>& f, const DegreeSpec& spec) {
    return to_rows(build_system(series(f), spec));
  }, py::arg("f"), py::arg("spec"));
  m.def("solve_hpp", [](const std::vector<Real>& f, const DegreeSpec& spec) {
    return solve_hpp(series(f), spec);
  }, py::arg("f"), py::arg("spec"));
  m.def("verify_order",
        [](const std::vector<Real>& f, const PolynomialSet& set, const DegreeSpec& spec) {
          return verify_order(series(f), set, spec);
        },
        py::arg("f"), py::arg("set"), py::arg("spec"));

  // predictor
  py::class_<PredictionState>(m, "PredictionState")
      .def(py::init([](const std::vector<Real>& f, const DegreeSpec& spec, const PolynomialSet& set,
                       std::optional<std::size_t> seed_length) {
             return PredictionState(series(f), spec, set, seed_length);
           }),
           py::arg("f"), py::arg("spec"), py::arg("set"), py::arg("seed_length") = py::none())
      .def_property_readonly("coeffs", &PredictionState::coeffs)
      .def_property_readonly("C", &PredictionState::C)
      .def_property_readonly("M", &PredictionState::M)
      .def_property_readonly("next_index", &PredictionState::next_index);

  m.def("compute_C", &compute_C, py::arg("set"), py::arg("f0"));
  m.def("compute_DJ", py::overload_cast<const PredictionState&, std::size_t>(&compute_DJ),
        py::arg("state"), py::arg("J"));
  m.def("predict_next", &predict_next, py::arg("state"));
  m.def("predict_quadratic_fast", &predict_quadratic_fast, py::arg("state"));
  m.def("residual_RJ", py::overload_cast<const PredictionState&, std::size_t>(&residual_RJ),
        py::arg("state"), py::arg("J"));
  m.def("predict_k",
        [](const std::vector<Real>& f, const DegreeSpec& spec, const PolynomialSet& set, std::size_t k) {
          return predict_k(series(f), spec, set, k);
        },
        py::arg("f"), py::arg("spec"), py::arg("set"), py::arg("k"));

  // approximant
  py::class_<ApproximantValue>(m, "ApproximantValue")
      .def_readonly("z", &ApproximantValue::z)
      .def_readonly("value", &ApproximantValue::value)
      .def_readonly("branch_index", &ApproximantValue::branch_index)
      .def_readonly("residual", &ApproximantValue::residual);
  m.def("polynomial_roots", [](const std::vector<Complex>& c) { return polynomial_roots(c); },
        py::arg("coeffs"));
  m.def("roots_of_section", &roots_of_section, py::arg("set"), py::arg("z"));
  m.def("eval_at", [](const PolynomialSet& set, const std::vector<Real>& seed, Complex z) {
    return eval_at(set, series(seed), z);
  }, py::arg("set"), py::arg("seed"), py::arg("z"));

  // oracle_functions
  m.def("example", [](const std::string& name, std::size_t length) {
    const auto spec = named_example(name);
    if (!spec) throw py::value_error("unknown example '" + name + "'");
    return taylor(*spec, length).vector();
  }, py::arg("name"), py::arg("length"));
  m.def("oracle", [](const std::string& expression, std::size_t length) {
    return taylor(parse_oracle_expression(expression), length).vector();
  }, py::arg("expression"), py::arg("length"));

  py::class_<ErrorRow>(m, "ErrorRow")
      .def_readonly("j", &ErrorRow::j)
      .def_readonly("f_j", &ErrorRow::truth)
      .def_readonly("a_j", &ErrorRow::predicted)
      .def_readonly("abs_err", &ErrorRow::abs_err)
      .def_readonly("rel_err_pct", &ErrorRow::rel_err_pct)
      .def_property_readonly("zero_truth", &ErrorRow::zero_truth);
  m.def("reference_errors",
        [](const std::vector<Real>& truth, const std::vector<Real>& predicted, std::size_t start) {
          return reference_errors(series(truth), predicted, start);
        },
        py::arg("truth"), py::arg("predicted"), py::arg("start_index"));

  // cli
  m.def("run_cli",
        [](const std::string& command, std::optional<std::filesystem::path> input, int N,
           std::vector<int> degrees, std::size_t predict, std::optional<std::filesystem::path> truth,
           int digits, const std::string& format, std::string example, std::size_t count) {
          cli::RunConfig config;
          config.command = command;
          if (input) config.input = *input;
          config.N = N;
          config.degrees = std::move(degrees);
          config.predict = predict;
          config.truth = std::move(truth);
          config.digits = digits;
          config.format = parse_format(format);
          config.example = std::move(example);
          config.count = count;
          std::ostringstream out, err;
          const int code = cli::run(config, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("command"), py::arg("input") = py::none(), py::arg("N") = 0,
        py::arg("degrees") = std::vector<int>{}, py::arg("predict") = 6, py::arg("truth") = py::none(),
        py::arg("digits") = 6, py::arg("format") = "text", py::arg("example") = "",
        py::arg("count") = 0);
}
