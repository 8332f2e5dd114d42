#include "accelramsey/amplitude.hpp"
#include "accelramsey/config.hpp"
#include "accelramsey/error.hpp"
#include "accelramsey/interferometer.hpp"
#include "accelramsey/output.hpp"
#include "accelramsey/physics.hpp"
#include "accelramsey/selfcheck.hpp"
#include "accelramsey/specfun.hpp"
#include "accelramsey/sweep.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

namespace py = pybind11;
using namespace accelramsey;

namespace {

LabParams make_params(double omega, double nu_k, double lambda_k, double kappa, double omega_L, double accel,
                      double window_T, double phi) {
    LabParams p;
    p.omega = omega;
    p.nu_k = nu_k;
    p.lambda_k = lambda_k;
    p.kappa = kappa;
    p.omega_L = omega_L;
    p.accel = accel;
    p.window_T = WindowTime::seconds(window_T);
    p.phi = phi;
    return p;
}

std::string run_command(const std::string& command, const std::map<std::string, std::string>& settings) {
    RunConfig config;
    config.output.format = OutputFormat::json;
    for (const auto& [key, value] : settings) {
        apply_setting(config, key, value);
    }
    config.validate();
    SweepOutput out;
    if (command == "amplitude") {
        out = run_amplitude(config);
    } else if (command == "visibility") {
        out = run_visibility(config);
    } else if (command == "fig3") {
        out = run_fig3(config, {config.conventions.freq});
    } else if (command == "fig4") {
        out = run_fig4(config);
    } else {
        throw Error(ErrorKind::config, "unknown command '" + command + "'");
    }
    std::ostringstream os;
    if (config.output.format == OutputFormat::csv) {
        write_csv(os, out, config);
    } else {
        write_json(os, out, config);
    }
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_accelramsey, m) {
    m.doc() = "Acceleration radiation in a Ramsey interferometer";
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    m.def("log_gamma", &specfun::log_gamma, py::arg("z"));
    m.def("gamma", &specfun::gamma, py::arg("z"));
    m.def("upper_incomplete_gamma", &specfun::upper_incomplete_gamma, py::arg("s"), py::arg("x"));
    m.def("lower_incomplete_gamma", &specfun::lower_incomplete_gamma, py::arg("s"), py::arg("x"));
    m.def("digamma", &specfun::digamma, py::arg("z"));

    py::class_<LabParams>(m, "LabParams")
        .def(py::init(&make_params), py::arg("omega") = 1e9, py::arg("nu_k") = 1e9, py::arg("lambda_k") = 5e7,
             py::arg("kappa") = 2e8, py::arg("omega_L") = 5e8, py::arg("accel") = 5e17, py::arg("window_T") = 1e-9,
             py::arg("phi") = 0.0)
        .def_readwrite("omega", &LabParams::omega)
        .def_readwrite("nu_k", &LabParams::nu_k)
        .def_readwrite("lambda_k", &LabParams::lambda_k)
        .def_readwrite("kappa", &LabParams::kappa)
        .def_readwrite("omega_L", &LabParams::omega_L)
        .def_readwrite("accel", &LabParams::accel)
        .def_readwrite("phi", &LabParams::phi)
        .def_property(
            "window_T", [](const LabParams& p) { return p.window_T.value(); },
            [](LabParams& p, double t) { p.window_T = WindowTime::seconds(t); });

    py::class_<DressedParams>(m, "DressedParams")
        .def_readonly("delta", &DressedParams::delta)
        .def_readonly("delta_omega", &DressedParams::delta_omega)
        .def_readonly("rabi", &DressedParams::rabi)
        .def_readonly("cos_theta", &DressedParams::cos_theta)
        .def_readonly("sin_theta", &DressedParams::sin_theta);

    m.def(
        "dressed_params",
        [](const LabParams& p, bool signed_detuning) {
            return dressed_params(p, signed_detuning ? DetuningConvention::keep_sign : DetuningConvention::magnitude);
        },
        py::arg("params"), py::arg("signed_detuning") = false);

    m.def("unruh_temperature", &unruh_temperature, py::arg("accel"));
    m.def("amplitude_closed_form", [](const LabParams& p) { return amplitude_closed_form(p).value; });
    m.def("amplitude_infinite_window", [](const LabParams& p) { return amplitude_infinite_window(p).value; });
    m.def("amplitude_quadrature", [](const LabParams& p) { return amplitude_quadrature(p).value; });
    m.def("prob_thermal_limit", &prob_thermal_limit);
    m.def("prob_finite_time", &prob_finite_time);
    m.def("prob_high_acceleration", &prob_high_acceleration);

    const auto method = [](bool closed) {
        return closed ? InterferenceMethod::closed_form : InterferenceMethod::brute_force;
    };
    m.def(
        "detection_probability",
        [method](const LabParams& p, const DressedParams& d, Complex amp, bool closed) {
            return detection_probability(p, d, amp, method(closed));
        },
        py::arg("params"), py::arg("dressed"), py::arg("amplitude"), py::arg("closed_form") = false);
    m.def(
        "visibility",
        [method](const LabParams& p, const DressedParams& d, Complex amp, bool closed) {
            return visibility(p, d, amp, method(closed));
        },
        py::arg("params"), py::arg("dressed"), py::arg("amplitude"), py::arg("closed_form") = false);
    m.def(
        "visibility_difference",
        [method](const LabParams& p, const DressedParams& d, Complex amp, bool closed) {
            return visibility_difference(p, d, amp, method(closed));
        },
        py::arg("params"), py::arg("dressed"), py::arg("amplitude"), py::arg("closed_form") = false);

    m.def("run_command", &run_command, py::arg("command"), py::arg("settings") = std::map<std::string, std::string>{},
          "Runs a sweep command; returns the formatted output text.");
    m.def(
        "selfcheck_json",
        [](std::optional<double> tolerance, int sweep_points) {
            SelfcheckOptions options;
            options.tolerance_override = tolerance;
            options.sweep_points = sweep_points;
            return run_selfcheck(options).to_json().dump();
        },
        py::arg("tolerance_override") = py::none(), py::arg("sweep_points") = 60);
}
