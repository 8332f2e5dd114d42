#include "accelramsey/output.hpp"

#include "accelramsey/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>

namespace accelramsey {
namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

std::string join_flags(const std::vector<std::string>& flags) {
    std::string joined;
    for (const auto& f : flags) {
        if (!joined.empty()) {
            joined += "; ";
        }
        joined += f;
    }
    return joined;
}

// Numbers in JSON carry the same digits as the CSV.
nlohmann::json rounded(double value, int precision) {
    if (!std::isfinite(value)) {
        return format_number(value, precision);
    }
    return std::strtod(format_number(value, precision).c_str(), nullptr);
}

bool is_text_column(std::string_view name) {
    return name == "series" || name == "sweep_variable" || name == "freq_convention" || name == "detuning" ||
           name == "amplitude_source" || name == "flags";
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string format_number(double value, int precision) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", precision - 1, value == 0.0 ? 0.0 : value);
    return buf;
}

const std::vector<std::string>& record_columns() {
    static const std::vector<std::string> columns{
        "series",        "sweep_variable", "sweep_value",   "omega",          "nu_k",
        "lambda_k",      "kappa",          "omega_L",       "accel",          "window_T",
        "phi",           "freq_convention", "detuning",     "amplitude_source", "delta",
        "delta_omega",   "rabi",           "cos_theta",     "sin_theta",      "w",
        "alpha",         "beta",           "i_closed_re",   "i_closed_im",    "i_quad_re",
        "i_quad_im",     "quad_est_error", "i_used_re",     "i_used_im",      "p_used",
        "p_thermal",     "p_finite_time",  "p_high_accel",  "pg_brute",       "pg_closed",
        "v_brute",       "v_closed",       "delta_v",       "delta_v_closed", "rho_gg",
        "rho_ge_re",     "rho_ge_im",      "rho_ee",        "flags"};
    return columns;
}

std::vector<std::string> record_fields(const SweepRecord& r, int precision) {
    const auto num = [precision](double x) { return format_number(x, precision); };
    const LabParams& in = r.inputs;
    return {r.series,
            r.variable == SweepVariable::accel ? "accel" : "kappa",
            num(r.sweep_value),
            num(in.omega),
            num(in.nu_k),
            num(in.lambda_k),
            num(in.kappa),
            num(in.omega_L),
            num(in.accel),
            num(in.window_T.value()),
            num(in.phi),
            std::string(to_string(r.conventions.freq)),
            std::string(to_string(r.conventions.detuning)),
            std::string(to_string(r.source)),
            num(r.dressed.delta),
            num(r.dressed.delta_omega),
            num(r.dressed.rabi),
            num(r.dressed.cos_theta),
            num(r.dressed.sin_theta),
            num(r.ratios.w),
            num(r.ratios.alpha),
            num(r.ratios.beta),
            num(r.i_closed.real()),
            num(r.i_closed.imag()),
            r.i_quad ? num(r.i_quad->real()) : "",
            r.i_quad ? num(r.i_quad->imag()) : "",
            r.quad_est_error ? num(*r.quad_est_error) : "",
            num(r.i_used.real()),
            num(r.i_used.imag()),
            num(std::norm(r.i_used)),
            num(r.p_thermal),
            num(r.p_finite_time),
            num(r.p_high_accel),
            num(r.pg_brute),
            num(r.pg_closed),
            num(r.v_brute),
            num(r.v_closed),
            num(r.delta_v),
            num(r.delta_v_closed),
            num(r.rho.rho_gg.real()),
            num(r.rho.rho_ge.real()),
            num(r.rho.rho_ge.imag()),
            num(r.rho.rho_ee.real()),
            join_flags(r.flags)};
}

nlohmann::json make_metadata(const SweepOutput& output, const RunConfig& config) {
    nlohmann::json config_json = config.to_json();
    config_json.erase("format");
    const std::string canonical = output.command + "\n" + config_json.dump();
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(canonical)));

    nlohmann::json meta;
    meta["tool"] = "accelramsey";
    meta["version"] = std::string(kCodeVersion);
    meta["command"] = output.command;
    meta["config_hash"] = std::string("fnv1a64:") + hash;
    meta["config"] = config_json;
    meta["conventions"] = {{"freq", std::string(to_string(config.conventions.freq))},
                           {"detuning", std::string(to_string(config.conventions.detuning))}};
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : output.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"hard", c.hard}, {"detail", c.detail}});
    }
    meta["checks"] = checks;
    std::size_t flagged = 0;
    for (const auto& r : output.records) {
        flagged += !r.flags.empty();
    }
    meta["records"] = output.records.size();
    meta["flagged_records"] = flagged;
    meta["columns"] = record_columns();
    return meta;
}

void write_csv(std::ostream& out, const SweepOutput& output, const RunConfig& config) {
    out << "# " << make_metadata(output, config).dump() << "\n";
    const auto& columns = record_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << "\n";
    for (const auto& r : output.records) {
        const auto fields = record_fields(r, config.output.precision);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "," : "") << csv_quote(fields[i]);
        }
        out << "\n";
    }
}

void write_json(std::ostream& out, const SweepOutput& output, const RunConfig& config) {
    const int precision = config.output.precision;
    const auto& columns = record_columns();
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : output.records) {
        const auto fields = record_fields(r, precision);
        nlohmann::json row = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (is_text_column(columns[i])) {
                row[columns[i]] = fields[i];
            } else if (fields[i].empty()) {
                row[columns[i]] = nullptr;
            } else {
                row[columns[i]] = rounded(std::strtod(fields[i].c_str(), nullptr), precision);
            }
        }
        row["flags"] = r.flags;
        records.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["metadata"] = make_metadata(output, config);
    doc["records"] = std::move(records);
    out << doc.dump(2) << "\n";
}

void write_output(const SweepOutput& output, const RunConfig& config) {
    const auto emit = [&](std::ostream& os) {
        if (config.output.format == OutputFormat::csv) {
            write_csv(os, output, config);
        } else {
            write_json(os, output, config);
        }
    };
    if (config.output.path.empty()) {
        emit(std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw Error(ErrorKind::io, "failed writing to stdout");
        }
        return;
    }
    std::ofstream file(config.output.path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::io, "cannot open output file '" + config.output.path + "'");
    }
    emit(file);
    file.close();
    if (!file) {
        throw Error(ErrorKind::io, "failed writing output file '" + config.output.path + "'");
    }
}

}  // namespace accelramsey
