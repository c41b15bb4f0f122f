// Python bindings. Structured values cross the boundary as JSON text; wavekit/__init__.py decodes them.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavekit/balance.hpp"
#include "wavekit/scenario.hpp"

namespace py = pybind11;
using namespace wavekit;

namespace {

Scenario parse(const std::string& text) { return Json::parse(text).get<Scenario>(); }

std::string scenario_text(Scenario s) {
    s.validate();
    return Json(s).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact solution generator and residual checker for the generalized NNV system";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<SingularPointError>(m, "SingularPointError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("balance", [] { return Json(solve_balance_exponents()).dump(); });

    m.def(
        "build_soliton",
        [](const std::string& family, std::vector<Complex> p, double a, double b, double c, double d, Complex a000,
           Complex b000, Complex c000) {
            Scenario s;
            s.eqc = {a, b, c, d};
            s.bg = {a000, b000, c000};
            s.solution = make_soliton_spec(family_from_string(family), s.eqc, s.bg, std::move(p));
            return scenario_text(std::move(s));
        },
        py::arg("family"), py::arg("p"), py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("c") = 0.0,
        py::arg("d") = 0.0, py::arg("a000") = Complex{}, py::arg("b000") = Complex{}, py::arg("c000") = Complex{});

    m.def(
        "build_threewave",
        [](int case_id, int branch, int eps, const ParameterMap& params, double a, double b, double c, double d,
           bool corrected) {
            Scenario s;
            s.eqc = {a, b, c, d};
            const ThreeWaveSpec spec = instantiate(case_id, branch, eps, s.eqc, params, corrected);
            s.bg = spec.bg;
            s.solution = spec;
            s.sample = {50, -2.0, 2.0};
            return scenario_text(std::move(s));
        },
        py::arg("case"), py::arg("branch"), py::arg("eps"), py::arg("params"), py::arg("a") = 1.0,
        py::arg("b") = 1.0, py::arg("c") = 0.0, py::arg("d") = 0.0, py::arg("corrected") = false);

    m.def(
        "verify",
        [](const std::string& scenario) {
            const VerifyResult r = verify_scenario(parse(scenario));
            return py::make_tuple(r.all_pass(), r.acceptable(), r.to_json().dump());
        },
        py::arg("scenario"));

    m.def("grid_csv", [](const std::string& scenario) { return grid_csv(evaluate_grid(parse(scenario))); },
          py::arg("scenario"));

    m.def(
        "fields",
        [](const std::string& scenario, double x, double y, double t) {
            const FieldValues f = parse(scenario).fields().at({x, y, t});
            return py::make_tuple(f.u, f.v, f.omega);
        },
        py::arg("scenario"), py::arg("x"), py::arg("y"), py::arg("t"));

    m.def("list_cases", [] {
        Json j = Json::array();
        for (const auto& b : list_cases()) j.push_back(b);
        return j.dump();
    });

    m.def(
        "sweep",
        [](std::uint64_t seed, std::size_t points, bool include_corrected) {
            SweepOptions o;
            o.seed = seed;
            o.points = points;
            o.include_corrected = include_corrected;
            py::gil_scoped_release release;
            const auto verdicts = sweep_threewave(o);
            return sweep_report(verdicts).dump();
        },
        py::arg("seed") = SweepOptions{}.seed, py::arg("points") = SweepOptions{}.points,
        py::arg("include_corrected") = false);
}
