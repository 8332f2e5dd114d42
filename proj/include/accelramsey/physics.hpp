#pragma once

// Laboratory parameters, semiclassical dressed states, Rindler kinematics.

#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace accelramsey {

namespace constants {
inline constexpr double c = 299792458.0;        // m/s, exact
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J/K, exact
}  // namespace constants

/// Interaction window time T of the exp(-|tau|/T) switching profile.
/// Either a positive duration or the distinguished infinite value.
class WindowTime {
public:
    static WindowTime seconds(double value);
    static constexpr WindowTime infinite() noexcept { return WindowTime(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    /// Seconds; +inf for the infinite window.
    constexpr double value() const noexcept {
        return infinite_ ? std::numeric_limits<double>::infinity() : seconds_;
    }
    /// 1/T, exactly zero for the infinite window.
    constexpr double inverse() const noexcept { return infinite_ ? 0.0 : 1.0 / seconds_; }

    friend constexpr bool operator==(const WindowTime&, const WindowTime&) = default;

private:
    constexpr WindowTime() = default;
    bool infinite_ = true;
    double seconds_ = 0.0;
};

enum class FrequencyConvention { angular, hertz };
enum class DetuningConvention { keep_sign, magnitude };

std::string_view to_string(FrequencyConvention convention) noexcept;
std::string_view to_string(DetuningConvention convention) noexcept;

/// All laboratory-frame inputs. Frequencies are angular (rad/s) once
/// `to_angular` has been applied; the defaults are the reference laboratory values.
struct LabParams {
    double omega = 1e9;       // atomic transition
    double nu_k = 1e9;        // cavity mode
    double lambda_k = 5e7;    // atom-cavity coupling
    double kappa = 2e8;       // atom-laser coupling
    double omega_L = 5e8;     // laser frequency
    double accel = 5e17;      // proper acceleration, m/s^2
    WindowTime window_T = WindowTime::seconds(1e-9);
    double phi = 0.0;         // Ramsey phase, rad
};

/// Scales every frequency field by 2*pi under the hertz convention.
LabParams to_angular(LabParams params, FrequencyConvention convention);

/// Throws Error{domain} unless all frequencies are positive and finite,
/// accel >= 0 and phi is finite.
void validate(const LabParams& params);

struct DressedParams {
    double delta = 0.0;        // Delta = omega_L - omega (or |Delta|)
    double delta_omega = 0.0;  // light shift 2 kappa^2 / Delta
    double rabi = 0.0;         // sqrt(Delta^2 + 4 kappa^2)
    double cos_theta = 0.0;
    double sin_theta = 1.0;

    double cos2_theta() const noexcept { return cos_theta * cos_theta; }
    double sin_2theta() const noexcept { return 2.0 * sin_theta * cos_theta; }
};

DressedParams dressed_params(const LabParams& params, DetuningConvention convention);

/// Validity diagnostics: weak coupling (lambda_k/omega <= 0.25) and large
/// detuning (|Delta|/kappa >= 2).
std::vector<std::string> validity_warnings(const LabParams& params, const DressedParams& dressed);

struct SpacetimePoint {
    double t;  // s
    double z;  // m
};

SpacetimePoint rindler_trajectory(double tau, double accel);

double unruh_temperature(double accel);

/// Lab-frame distance covered from rest after proper time tau.
double cavity_length_estimate(double accel, double interaction_time);

/// Dimensionless groups that control the amplitude.
struct KinematicRatios {
    double w;      // omega c / a
    double alpha;  // nu_k c / a
    double beta;   // c / (a T), zero for the infinite window
};

KinematicRatios kinematic_ratios(const LabParams& params);

}  // namespace accelramsey
