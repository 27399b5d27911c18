#include "fewnomial/bounds.hpp"
#include "fewnomial/critical.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/homology.hpp"
#include "fewnomial/instance.hpp"
#include "fewnomial/report.hpp"
#include "fewnomial/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace fewnomial;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.

Vector base_simplex(const Instance& inst, const NormalizedSum& ns, double scale) {
  if (inst.base_M) {
    if (inst.base_M->size() != ns.dim() + 1) {
      throw InputError(InputError::Code::dimension_mismatch, "\"M\" has the wrong length for this instance");
    }
    return *inst.base_M;
  }
  return Vector::Constant(ns.dim() + 1, scale);
}

std::string census(const std::string& text, std::uint64_t seed, int starts, bool shift, double m) {
  const Instance inst = parse_instance_text(text);
  const NormalizedSum ns = normalize_instance(inst);
  CensusConfig cfg;
  cfg.solve.starts = starts;
  CensusReport rep = census_generic(ns, base_simplex(inst, ns, m), seed, cfg);
  if (shift) rep = choose_shift(ns, SimplexSpec(rep.M), rep.direction, cfg).census;
  return to_json(rep).dump();
}

std::string oracle(const std::string& text, int resolution, std::uint64_t seed, double m) {
  const Instance inst = parse_instance_text(text);
  const NormalizedSum ns = normalize_instance(inst);
  return to_json(betti_stable(ns, generic_simplex(base_simplex(inst, ns, m), seed, 0), resolution)).dump();
}

std::string verify(const std::string& text, std::uint64_t seed, int starts, int resolution, double m, bool timings) {
  VerifyConfig cfg;
  cfg.seed = seed;
  cfg.census.solve.starts = starts;
  cfg.resolution = resolution;
  cfg.base_M = m;
  return to_json(run_verify(parse_instance_text(text), cfg), timings).dump();
}

double evaluate_terms(const std::vector<std::vector<double>>& exponents, const std::vector<double>& coefficients,
                      const std::vector<double>& z) {
  const Instance inst = parse_instance_text(
      ReportJson{{"exponents", exponents}, {"coefficients", coefficients}}.dump());
  if (z.size() != static_cast<std::size_t>(inst.raw.ambient_dim())) {
    throw InputError(InputError::Code::dimension_mismatch, "point has the wrong dimension");
  }
  return evaluate(inst.raw, Eigen::Map<const Vector>(z.data(), static_cast<Eigen::Index>(z.size())));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fewnomial bounds, stratified Morse census and homology oracle";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<GenericityExhausted> genericity(m, "GenericityExhausted", PyExc_RuntimeError);
  static py::exception<BoundViolation> violation(m, "BoundViolation", PyExc_RuntimeError);
  static py::exception<StabilizationError> stabilization(m, "StabilizationError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const GenericityExhausted& e) {
      py::set_error(genericity, e.what());
    } catch (const BoundViolation& e) {
      py::set_error(violation, e.what());
    } catch (const StabilizationError& e) {
      py::set_error(stabilization, e.what());
    }
  });

  m.def("bs_constant", &bs_constant);
  m.def("khovanskii_bound", [](int n, int l) { return khovanskii_bound(n, l).value; }, py::arg("n"), py::arg("l"));
  m.def("theorem1_bound", [](int n, int l) { return theorem1_bound(n, l).value; }, py::arg("n"), py::arg("l"));
  m.def("simple_bound", [](int n, int l) { return simple_bound(n, l).value; }, py::arg("n"), py::arg("l"));
  m.def("milnor_bound", [](int n, int d) { return milnor_bound(n, d).value; }, py::arg("n"), py::arg("d"));
  m.def("per_stratum_bound", [](int n, int s, bool zero, int l) { return per_stratum_bound(n, s, zero, l).value; },
        py::arg("n"), py::arg("s"), py::arg("zero_in_s"), py::arg("l"));
  m.def("bounds_json", [](int n, int l, std::optional<int> d) { return to_json(compare_bounds(n, l, d)).dump(); },
        py::arg("n"), py::arg("l"), py::arg("d") = py::none());

  m.def("random_instance_json",
        [](int n, int l, std::uint64_t seed) { return instance_to_json(random_instance(n, l, seed)); },
        py::arg("n"), py::arg("l"), py::arg("seed"));
  m.def("census_json", &census, py::arg("instance"), py::arg("seed") = 1, py::arg("starts") = 0,
        py::arg("shift") = false, py::arg("M") = 2.0, py::call_guard<py::gil_scoped_release>());
  m.def("oracle_json", &oracle, py::arg("instance"), py::arg("resolution") = 32, py::arg("seed") = 1,
        py::arg("M") = 2.0, py::call_guard<py::gil_scoped_release>());
  m.def("verify_json", &verify, py::arg("instance"), py::arg("seed") = 1, py::arg("starts") = 0,
        py::arg("resolution") = 32, py::arg("M") = 2.0, py::arg("timings") = true,
        py::call_guard<py::gil_scoped_release>());
  m.def("evaluate", &evaluate_terms, py::arg("exponents"), py::arg("coefficients"), py::arg("z"));
  m.def("isolate_roots",
        [](const std::vector<double>& exponents, const std::vector<double>& coefficients, double lo, double hi) {
          std::vector<std::vector<double>> ex;
          for (double a : exponents) ex.push_back({a});
          const Instance inst = parse_instance_text(ReportJson{{"exponents", ex}, {"coefficients", coefficients}}.dump());
          return isolate_roots_1d(inst.raw, lo, hi);
        },
        py::arg("exponents"), py::arg("coefficients"), py::arg("lo"), py::arg("hi"));
}
