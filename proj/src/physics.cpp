#include "accelramsey/physics.hpp"

#include "accelramsey/error.hpp"

#include <cmath>
#include <numbers>

namespace accelramsey {

WindowTime WindowTime::seconds(double value) {
    if (std::isinf(value) && value > 0.0) {
        return infinite();
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorKind::domain, "window time must be > 0, got " + std::to_string(value));
    }
    WindowTime t;
    t.infinite_ = false;
    t.seconds_ = value;
    return t;
}

std::string_view to_string(FrequencyConvention convention) noexcept {
    return convention == FrequencyConvention::angular ? "angular" : "hertz";
}

std::string_view to_string(DetuningConvention convention) noexcept {
    return convention == DetuningConvention::keep_sign ? "signed" : "magnitude";
}

LabParams to_angular(LabParams params, FrequencyConvention convention) {
    if (convention == FrequencyConvention::hertz) {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        params.omega *= two_pi;
        params.nu_k *= two_pi;
        params.lambda_k *= two_pi;
        params.kappa *= two_pi;
        params.omega_L *= two_pi;
    }
    return params;
}

void validate(const LabParams& params) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw Error(ErrorKind::domain, std::string(name) + " must be positive and finite");
        }
    };
    positive(params.omega, "omega");
    positive(params.nu_k, "nu_k");
    positive(params.omega_L, "omega_L");
    if (!(params.lambda_k >= 0.0) || !std::isfinite(params.lambda_k)) {
        throw Error(ErrorKind::domain, "lambda_k must be >= 0 and finite");
    }
    if (!(params.kappa >= 0.0) || !std::isfinite(params.kappa)) {
        throw Error(ErrorKind::domain, "kappa must be >= 0 and finite");
    }
    if (!(params.accel >= 0.0) || !std::isfinite(params.accel)) {
        throw Error(ErrorKind::domain, "accel must be >= 0 and finite");
    }
    if (!std::isfinite(params.phi)) {
        throw Error(ErrorKind::domain, "phi must be finite");
    }
}

DressedParams dressed_params(const LabParams& params, DetuningConvention convention) {
    double delta = params.omega_L - params.omega;
    if (delta == 0.0) {
        throw Error(ErrorKind::zero_detuning, "omega_L == omega, dressed angle undefined");
    }
    if (convention == DetuningConvention::magnitude) {
        delta = std::abs(delta);
    }
    const double kappa2 = params.kappa * params.kappa;
    DressedParams d;
    d.delta = delta;
    d.delta_omega = 2.0 * kappa2 / delta;
    d.rabi = std::sqrt(delta * delta + 4.0 * kappa2);

    const double denom = 2.0 * (delta + d.delta_omega);
    const double cos2 = d.delta_omega / denom;
    const double sin2 = (2.0 * delta + d.delta_omega) / denom;
    if (cos2 < 0.0 || sin2 < 0.0) {
        throw Error(ErrorKind::negative_radicand,
                    "dressed-angle radicand negative under the " + std::string(to_string(convention)) +
                        " detuning convention");
    }
    d.cos_theta = std::sqrt(cos2);
    d.sin_theta = std::sqrt(sin2);
    return d;
}

std::vector<std::string> validity_warnings(const LabParams& params, const DressedParams& dressed) {
    std::vector<std::string> warnings;
    if (params.lambda_k / params.omega > 0.25) {
        warnings.emplace_back("weak-coupling: lambda_k/omega > 0.25");
    }
    if (params.kappa > 0.0 && std::abs(dressed.delta) / params.kappa < 2.0) {
        warnings.emplace_back("large-detuning: |Delta|/kappa < 2");
    }
    return warnings;
}

SpacetimePoint rindler_trajectory(double tau, double accel) {
    if (!(accel > 0.0)) {
        throw Error(ErrorKind::zero_acceleration, "Rindler trajectory requires accel > 0");
    }
    const double horizon = constants::c / accel;
    const double rapidity = tau / horizon;
    return {horizon * std::sinh(rapidity), constants::c * horizon * std::cosh(rapidity)};
}

double unruh_temperature(double accel) {
    if (!(accel >= 0.0)) {
        throw Error(ErrorKind::domain, "accel must be >= 0");
    }
    return constants::hbar * accel / (2.0 * std::numbers::pi * constants::k_B * constants::c);
}

double cavity_length_estimate(double accel, double interaction_time) {
    if (!(accel >= 0.0) || !(interaction_time > 0.0)) {
        throw Error(ErrorKind::domain, "cavity length needs accel >= 0 and interaction_time > 0");
    }
    if (accel == 0.0) {
        return 0.0;
    }
    // cosh(x) - 1 = 2 sinh^2(x/2), free of cancellation for small x.
    const double half = 0.5 * accel * interaction_time / constants::c;
    const double s = std::sinh(half);
    return constants::c * constants::c / accel * 2.0 * s * s;
}

KinematicRatios kinematic_ratios(const LabParams& params) {
    if (!(params.accel > 0.0)) {
        throw Error(ErrorKind::domain, "amplitude requires accel > 0");
    }
    const double horizon = constants::c / params.accel;
    return {params.omega * horizon, params.nu_k * horizon, horizon * params.window_T.inverse()};
}

}  // namespace accelramsey
