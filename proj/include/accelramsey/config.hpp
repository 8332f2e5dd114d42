#pragma once

// Run configuration: flat key = value files and CLI overrides.

#include "accelramsey/amplitude.hpp"
#include "accelramsey/physics.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace accelramsey {

enum class SweepVariable { accel, kappa };
enum class GridScale { linear, log };
enum class OutputFormat { csv, json };

struct GridSpec {
    double start = 1e16;
    double stop = 1e18;
    int points = 60;
    GridScale scale = GridScale::log;

    std::vector<double> values() const;
};

/// Parses "start:stop:npoints:log|lin".
GridSpec parse_grid(std::string_view text);

struct Conventions {
    FrequencyConvention freq = FrequencyConvention::angular;
    DetuningConvention detuning = DetuningConvention::magnitude;
};

struct OutputSpec {
    std::string path;  // empty: stdout
    OutputFormat format = OutputFormat::csv;
    int precision = 12;  // significant digits
};

struct RunConfig {
    LabParams params;  // in configuration units, before the frequency convention
    SweepVariable variable = SweepVariable::accel;
    GridScale scale = GridScale::log;
    std::vector<double> grid = GridSpec{}.values();
    Conventions conventions;
    AmplitudeSource amplitude_source = AmplitudeSource::finite_time;
    QuadratureConfig quadrature;
    bool compute_quadrature = true;
    OutputSpec output;

    /// Throws Error{config}: grid non-empty and strictly increasing,
    /// precision in [6, 17], physical parameters valid.
    void validate() const;

    nlohmann::json to_json() const;
};

/// Applies one key = value assignment; throws Error{config} for unknown keys
/// or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Reads a flat key = value document ('#' starts a comment). Errors carry
/// the line number.
RunConfig parse_config(std::istream& in, RunConfig base = {}, std::string_view source = "<config>");

RunConfig load_config_file(const std::string& path, RunConfig base = {});

FrequencyConvention parse_frequency_convention(std::string_view text);
DetuningConvention parse_detuning_convention(std::string_view text);
OutputFormat parse_output_format(std::string_view text);
AmplitudeSource parse_amplitude_source(std::string_view text);

}  // namespace accelramsey
