#include <pybind11/pybind11.h>

#include <sstream>
#include <string>

#include "gumbel/commands.hpp"
#include "gumbel/io.hpp"

namespace py = pybind11;

namespace {

gumbel::cli::Format parse_format(const std::string& name) {
  if (name == "json") return gumbel::cli::Format::Json;
  if (name == "text") return gumbel::cli::Format::Text;
  throw gumbel::Error(gumbel::Errc::InvalidArgument, "format must be 'json' or 'text', got '" + name + "'");
}

gumbel::Dataset dataset_from_text(const std::string& csv) {
  std::istringstream in(csv);
  return gumbel::io::read_dataset(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact ML-degree analysis for Gumbel's Type-I bivariate exponential model";

  static py::exception<gumbel::Error> error(m, "GumbelError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gumbel::Error& e) {
      py::object exc = error;
      py::object instance = exc(e.what());
      instance.attr("code") = std::string(gumbel::errc_name(e.code()));
      instance.attr("exit_code") = gumbel::cli::exit_code_for(e);
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  m.def(
      "analyze_csv",
      [](const std::string& csv, double tol, const std::string& format) {
        const gumbel::Dataset ds = dataset_from_text(csv);
        py::gil_scoped_release release;
        return gumbel::cli::analyze(ds, tol, parse_format(format));
      },
      py::arg("csv"), py::arg("tol") = gumbel::kDefaultRootTol, py::arg("format") = "json",
      "Analysis report for CSV text (x,y or c,d rows).");

  m.def(
      "curve_csv",
      [](const std::string& csv, int points) { return gumbel::cli::curve(dataset_from_text(csv), points); },
      py::arg("csv"), py::arg("points") = 1001);

  m.def(
      "simulate",
      [](int n, double theta, int reps, std::uint64_t seed, double tol, int jobs, const std::string& format) {
        gumbel::cli::SimulateOptions opts{n, theta, reps, seed, tol, jobs, parse_format(format)};
        py::gil_scoped_release release;
        return gumbel::cli::simulate(opts);
      },
      py::arg("n"), py::arg("theta"), py::arg("reps"), py::arg("seed") = 1, py::arg("tol") = gumbel::kDefaultRootTol,
      py::arg("jobs") = 1, py::arg("format") = "json");

  m.def(
      "fixture",
      [](const std::string& spec_json) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
          throw gumbel::Error(gumbel::Errc::ParseError, std::string("fixture spec: ") + e.what());
        }
        return gumbel::cli::fixture(gumbel::io::fixture_spec_from_json(j)).csv;
      },
      py::arg("spec_json"), "Dataset CSV realizing a fixture spec given as JSON text.");

  m.attr("DEFAULT_TOL") = gumbel::kDefaultRootTol;
}
