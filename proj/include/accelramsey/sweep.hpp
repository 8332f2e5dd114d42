#pragma once

// Parameter sweeps behind the CLI subcommands.

#include "accelramsey/amplitude.hpp"
#include "accelramsey/config.hpp"
#include "accelramsey/interferometer.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace accelramsey {

struct SweepRecord {
    std::string series;
    SweepVariable variable = SweepVariable::accel;
    double sweep_value = 0.0;
    LabParams inputs;  // as configured, before the frequency convention
    Conventions conventions;
    AmplitudeSource source = AmplitudeSource::finite_time;

    DressedParams dressed;
    KinematicRatios ratios{};  // all +inf when accel = 0
    Complex i_closed;
    std::optional<Complex> i_quad;
    std::optional<double> quad_est_error;
    Complex i_used;  // amplitude fed to the interferometer
    double p_thermal = 0.0;
    double p_finite_time = 0.0;
    double p_high_accel = 0.0;
    double pg_brute = 0.0;
    double pg_closed = 0.0;
    double v_brute = 1.0;
    double v_closed = 1.0;
    double delta_v = 0.0;
    double delta_v_closed = 0.0;
    AtomDensityMatrix rho;
    std::vector<std::string> flags;
};

/// Evaluates one point. `raw` is in configuration units.
SweepRecord evaluate_point(const LabParams& raw, const RunConfig& config, std::string series, double sweep_value);

struct SweepCheck {
    std::string name;
    bool passed = true;
    bool hard = true;  // soft checks are recorded findings
    std::string detail;
};

struct SweepOutput {
    std::string command;
    std::vector<SweepRecord> records;
    std::vector<SweepCheck> checks;

    /// All hard checks passed.
    bool ok() const noexcept;
};

/// Single series over config.grid with the configured window.
SweepOutput run_amplitude(const RunConfig& config);
SweepOutput run_visibility(const RunConfig& config);

/// a-sweep with T = 1 ns and T -> infinity, once per listed convention.
SweepOutput run_fig3(const RunConfig& config, const std::vector<FrequencyConvention>& conventions);

struct CaptionPair {
    double kappa_mhz;
    double delta_omega_mhz;
};

inline constexpr std::array<CaptionPair, 6> kFig4Captions{{
    {150.0, 90.0}, {160.0, 102.0}, {170.0, 116.0}, {180.0, 130.0}, {190.0, 144.0}, {200.0, 160.0}}};

inline constexpr double kCaptionToleranceMhz = 0.5;

struct CaptionCheck {
    double kappa_mhz;
    double quoted_mhz;
    double computed_mhz;  // 2 kappa^2 / |Delta|
    bool passed;
};

/// Caption light shifts against 2 kappa^2 / |omega_L - omega|, in MHz of the
/// configured units.
std::vector<CaptionCheck> check_fig4_captions(const LabParams& raw);

/// Throws Error{invariant} if any caption pair fails, then sweeps a for
/// each caption kappa at T = 1 ns.
SweepOutput run_fig4(const RunConfig& config);

/// Points evaluated concurrently; results returned in input order.
std::vector<SweepRecord> evaluate_all(const std::vector<LabParams>& points, const RunConfig& config,
                                      const std::vector<std::string>& series, const std::vector<double>& sweep_values);

}  // namespace accelramsey
