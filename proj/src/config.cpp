#include "accelramsey/config.hpp"

#include "accelramsey/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace accelramsey {
namespace {

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
    throw Error(ErrorKind::config,
                "key '" + std::string(key) + "': invalid value '" + std::string(value) + "', expected " +
                    std::string(expected));
}

double parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    // from_chars for double is available in libstdc++ 11.
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        bad_value(key, text, "a finite number");
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        bad_value(key, text, "an integer");
    }
    return value;
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
    std::vector<double> values;
    while (!text.empty()) {
        const auto comma = text.find(',');
        values.push_back(parse_number(key, text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return values;
}

}  // namespace

std::vector<double> GridSpec::values() const {
    if (points < 1) {
        throw Error(ErrorKind::config, "grid needs at least one point");
    }
    if (scale == GridScale::log && !(start > 0.0 && stop > 0.0)) {
        throw Error(ErrorKind::config, "log grid needs positive endpoints");
    }
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = start;
        return out;
    }
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        out[static_cast<std::size_t>(i)] =
            scale == GridScale::log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                    : start + t * (stop - start);
    }
    // Pin the endpoints exactly.
    out.front() = start;
    out.back() = stop;
    return out;
}

GridSpec parse_grid(std::string_view text) {
    std::vector<std::string_view> parts;
    std::string_view rest = trim(text);
    while (true) {
        const auto colon = rest.find(':');
        parts.push_back(rest.substr(0, colon));
        if (colon == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(colon + 1);
    }
    if (parts.size() != 4) {
        bad_value("grid", text, "start:stop:npoints:log|lin");
    }
    GridSpec spec;
    spec.start = parse_number("grid", parts[0]);
    spec.stop = parse_number("grid", parts[1]);
    spec.points = parse_int("grid", parts[2]);
    const auto scale = trim(parts[3]);
    if (scale == "log") {
        spec.scale = GridScale::log;
    } else if (scale == "lin") {
        spec.scale = GridScale::linear;
    } else {
        bad_value("grid", text, "scale 'log' or 'lin'");
    }
    return spec;
}

FrequencyConvention parse_frequency_convention(std::string_view text) {
    if (text == "angular") return FrequencyConvention::angular;
    if (text == "hertz") return FrequencyConvention::hertz;
    bad_value("freq_convention", text, "angular|hertz");
}

DetuningConvention parse_detuning_convention(std::string_view text) {
    if (text == "magnitude") return DetuningConvention::magnitude;
    if (text == "signed") return DetuningConvention::keep_sign;
    bad_value("detuning", text, "magnitude|signed");
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    bad_value("format", text, "csv|json");
}

AmplitudeSource parse_amplitude_source(std::string_view text) {
    if (text == "finite_time") return AmplitudeSource::finite_time;
    if (text == "closed_form") return AmplitudeSource::closed_form;
    if (text == "quadrature") return AmplitudeSource::quadrature;
    bad_value("amplitude_source", text, "finite_time|closed_form|quadrature");
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
    value = trim(value);
    LabParams& p = config.params;
    if (key == "omega") {
        p.omega = parse_number(key, value);
    } else if (key == "nu_k") {
        p.nu_k = parse_number(key, value);
    } else if (key == "lambda_k") {
        p.lambda_k = parse_number(key, value);
    } else if (key == "kappa") {
        p.kappa = parse_number(key, value);
    } else if (key == "omega_L") {
        p.omega_L = parse_number(key, value);
    } else if (key == "accel") {
        p.accel = parse_number(key, value);
    } else if (key == "window_T") {
        if (value == "inf" || value == "infinite") {
            p.window_T = WindowTime::infinite();
        } else {
            const double t = parse_number(key, value);
            if (!(t > 0.0)) {
                bad_value(key, value, "a positive time or 'inf'");
            }
            p.window_T = WindowTime::seconds(t);
        }
    } else if (key == "phi") {
        p.phi = parse_number(key, value);
    } else if (key == "sweep_variable") {
        if (value == "accel") {
            config.variable = SweepVariable::accel;
        } else if (value == "kappa") {
            config.variable = SweepVariable::kappa;
        } else {
            bad_value(key, value, "accel|kappa");
        }
    } else if (key == "grid") {
        const GridSpec spec = parse_grid(value);
        config.grid = spec.values();
        config.scale = spec.scale;
    } else if (key == "grid_values") {
        config.grid = parse_list(key, value);
    } else if (key == "freq_convention") {
        config.conventions.freq = parse_frequency_convention(value);
    } else if (key == "detuning") {
        config.conventions.detuning = parse_detuning_convention(value);
    } else if (key == "amplitude_source") {
        config.amplitude_source = parse_amplitude_source(value);
    } else if (key == "quadrature") {
        if (value == "on") {
            config.compute_quadrature = true;
        } else if (value == "off") {
            config.compute_quadrature = false;
        } else {
            bad_value(key, value, "on|off");
        }
    } else if (key == "tau_span_in_T") {
        config.quadrature.tau_span_in_T = parse_number(key, value);
    } else if (key == "quad_rel_tol") {
        config.quadrature.rel_tol = parse_number(key, value);
    } else if (key == "quad_abs_tol") {
        config.quadrature.abs_tol = parse_number(key, value);
    } else if (key == "quad_max_subdivisions") {
        config.quadrature.max_subdivisions = parse_int(key, value);
    } else if (key == "format") {
        config.output.format = parse_output_format(value);
    } else if (key == "precision") {
        config.output.precision = parse_int(key, value);
    } else if (key == "out") {
        config.output.path = std::string(value);
    } else {
        throw Error(ErrorKind::config, "unknown key '" + std::string(key) + "'");
    }
}

RunConfig parse_config(std::istream& in, RunConfig base, std::string_view source) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        const auto where = std::string(source) + ":" + std::to_string(line_no) + ": ";
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::config, where + "expected 'key = value'");
        }
        try {
            apply_setting(base, trim(view.substr(0, eq)), view.substr(eq + 1));
        } catch (const Error& e) {
            throw Error(ErrorKind::config, where + e.what());
        }
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open config file '" + path + "'");
    }
    return parse_config(in, std::move(base), path);
}

void RunConfig::validate() const {
    if (grid.empty()) {
        throw Error(ErrorKind::config, "sweep grid is empty");
    }
    if (std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>()) != grid.end()) {
        throw Error(ErrorKind::config, "sweep grid must be strictly increasing");
    }
    if (output.precision < 6 || output.precision > 17) {
        throw Error(ErrorKind::config, "precision must be in [6, 17]");
    }
    if (variable == SweepVariable::accel && grid.front() < 0.0) {
        throw Error(ErrorKind::config, "acceleration grid must be >= 0");
    }
    if (variable == SweepVariable::kappa && grid.front() < 0.0) {
        throw Error(ErrorKind::config, "kappa grid must be >= 0");
    }
    try {
        accelramsey::validate(params);
        quadrature.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::config, e.what());
    }
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["omega"] = params.omega;
    j["nu_k"] = params.nu_k;
    j["lambda_k"] = params.lambda_k;
    j["kappa"] = params.kappa;
    j["omega_L"] = params.omega_L;
    j["accel"] = params.accel;
    j["window_T"] = params.window_T.is_infinite() ? nlohmann::json("inf") : nlohmann::json(params.window_T.value());
    j["phi"] = params.phi;
    j["sweep_variable"] = variable == SweepVariable::accel ? "accel" : "kappa";
    j["grid"] = grid;
    j["freq_convention"] = std::string(to_string(conventions.freq));
    j["detuning"] = std::string(to_string(conventions.detuning));
    j["amplitude_source"] = std::string(to_string(amplitude_source));
    j["quadrature"] = compute_quadrature ? "on" : "off";
    j["tau_span_in_T"] = quadrature.tau_span_in_T;
    j["quad_rel_tol"] = quadrature.rel_tol;
    j["quad_abs_tol"] = quadrature.abs_tol;
    j["quad_max_subdivisions"] = quadrature.max_subdivisions;
    j["precision"] = output.precision;
    j["format"] = output.format == OutputFormat::csv ? "csv" : "json";
    return j;
}

}  // namespace accelramsey
