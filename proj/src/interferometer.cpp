#include "accelramsey/interferometer.hpp"

#include "accelramsey/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace accelramsey {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kPerturbativeLimit = 0.3;

LabParams at_phase(LabParams params, double phi) {
    params.phi = phi;
    return params;
}

// P_g(pi) / (P_g(0) + P_g(pi)) pieces shared by the two visibility forms.
struct Extrema {
    double at_zero;
    double at_pi;
};

AtomFieldState pipeline_with_phase(Complex phase, const DressedParams& dressed, Complex amplitude) {
    AtomFieldState state = ramsey_pulse(AtomFieldState::ground(), RamseyZone::R1);
    state.amp_0e *= phase;
    state.amp_1e *= phase;
    state = cavity_interaction(state, amplitude, dressed);
    return ramsey_pulse(state, RamseyZone::R2);
}

// Brute-force extrema use the exact phase factors +1 and -1.
Extrema extrema(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                InterferenceMethod method) {
    if (method == InterferenceMethod::brute_force) {
        return {reduce_to_atom(pipeline_with_phase(1.0, dressed, amplitude)).rho_gg.real(),
                reduce_to_atom(pipeline_with_phase(-1.0, dressed, amplitude)).rho_gg.real()};
    }
    return {detection_probability(at_phase(params, 0.0), dressed, amplitude, method),
            detection_probability(at_phase(params, std::numbers::pi), dressed, amplitude, method)};
}

// Printed visibility: V = (1 + X s (1 - s)) / (1 + X (1 - s)) with
// X = |I|^2 (delta_omega / 2(Delta + delta_omega))^2, s = 2 kappa / (Delta + delta_omega).
struct VisibilityTerms {
    double x;
    double s;
};

VisibilityTerms visibility_terms(const LabParams& params, const DressedParams& dressed, Complex amplitude) {
    const double shifted = dressed.delta + dressed.delta_omega;
    const double cos2 = dressed.delta_omega / (2.0 * shifted);
    return {std::norm(amplitude) * cos2 * cos2, 2.0 * params.kappa / shifted};
}

}  // namespace

std::string_view to_string(InterferenceMethod method) noexcept {
    return method == InterferenceMethod::brute_force ? "brute_force" : "closed_form";
}

double AtomFieldState::norm2() const noexcept {
    return std::norm(amp_0g) + std::norm(amp_0e) + std::norm(amp_1g) + std::norm(amp_1e);
}

AtomFieldState AtomFieldState::normalized() const {
    const double n2 = norm2();
    if (!(n2 > 0.0)) {
        throw Error(ErrorKind::degenerate, "cannot normalize the zero state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    return {amp_0g * inv, amp_0e * inv, amp_1g * inv, amp_1e * inv};
}

double AtomDensityMatrix::min_eigenvalue() const noexcept {
    const double a = rho_gg.real();
    const double d = rho_ee.real();
    const double off = std::abs(0.5 * (rho_ge + std::conj(rho_eg)));
    return 0.5 * (a + d) - std::hypot(0.5 * (a - d), off);
}

bool AtomDensityMatrix::is_physical(double tol) const noexcept {
    const bool hermitian = std::abs(rho_ge - std::conj(rho_eg)) <= tol && std::abs(rho_gg.imag()) <= tol &&
                           std::abs(rho_ee.imag()) <= tol;
    return hermitian && std::abs(trace() - 1.0) <= tol && min_eigenvalue() >= -tol;
}

AtomFieldState ramsey_pulse(const AtomFieldState& state, RamseyZone zone) {
    auto rotate = [zone](Complex g, Complex e, Complex& g_out, Complex& e_out) {
        if (zone == RamseyZone::R1) {
            g_out = kInvSqrt2 * (g - e);
            e_out = kInvSqrt2 * (g + e);
        } else {
            g_out = kInvSqrt2 * (g + e);
            e_out = kInvSqrt2 * (e - g);
        }
    };
    AtomFieldState out;
    rotate(state.amp_0g, state.amp_0e, out.amp_0g, out.amp_0e);
    rotate(state.amp_1g, state.amp_1e, out.amp_1g, out.amp_1e);
    return out;
}

AtomFieldState accumulate_phase(const AtomFieldState& state, double phi) {
    const Complex phase = std::polar(1.0, phi);
    return {state.amp_0g, phase * state.amp_0e, state.amp_1g, phase * state.amp_1e};
}

AtomFieldState cavity_interaction(const AtomFieldState& state, Complex amplitude, const DressedParams& dressed) {
    const double c = dressed.cos_theta;
    const double s = dressed.sin_theta;
    const Complex coupling = amplitude * (c * c);
    if (std::abs(coupling) >= kPerturbativeLimit) {
        throw Error(ErrorKind::domain, "|I| cos^2(theta) >= 0.3: first-order cavity map not valid");
    }
    // Dressed amplitudes: <+| = s<g| + c<e|, <-| = c<g| - s<e|.
    const Complex zero_plus = s * state.amp_0g + c * state.amp_0e;
    const Complex one_plus = s * state.amp_1g + c * state.amp_1e;
    const Complex one_minus = c * state.amp_1g - s * state.amp_1e;
    if (std::abs(one_plus * coupling) > 1e-15) {
        throw Error(ErrorKind::truncation, "input populates |1,+>, which couples to the truncated n = 2 sector");
    }

    // Only |0,+> and |1,-> change; increments are added in the bare basis.
    const Complex d_zero_plus = -kI * std::conj(coupling) * one_minus;
    const Complex d_one_minus = -kI * coupling * zero_plus;
    return {state.amp_0g + s * d_zero_plus, state.amp_0e + c * d_zero_plus, state.amp_1g + c * d_one_minus,
            state.amp_1e - s * d_one_minus};
}

AtomFieldState full_pipeline_unnormalized(const LabParams& params, const DressedParams& dressed,
                                          Complex amplitude) {
    return pipeline_with_phase(std::polar(1.0, params.phi), dressed, amplitude);
}

AtomFieldState full_pipeline(const LabParams& params, const DressedParams& dressed, Complex amplitude) {
    return full_pipeline_unnormalized(params, dressed, amplitude).normalized();
}

AtomDensityMatrix reduce_to_atom(const AtomFieldState& state) {
    const double n2 = state.norm2();
    if (!(n2 > 0.0)) {
        throw Error(ErrorKind::degenerate, "zero-norm state has no reduced density matrix");
    }
    const double inv = 1.0 / n2;
    const Complex gg = std::norm(state.amp_0g) + std::norm(state.amp_1g);
    const Complex ee = std::norm(state.amp_0e) + std::norm(state.amp_1e);
    const Complex ge = state.amp_0g * std::conj(state.amp_0e) + state.amp_1g * std::conj(state.amp_1e);
    return {gg * inv, ge * inv, std::conj(ge) * inv, ee * inv};
}

FormFactors form_factors(const DressedParams& dressed, double phi) {
    const double c = dressed.cos_theta;
    const double s = dressed.sin_theta;
    const Complex mix = std::polar(c, 0.5 * phi) + std::polar(s, -0.5 * phi);
    const Complex base = 0.5 * c * c * mix;
    return {base * (c + s), base * (c - s)};
}

double detection_probability(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                             InterferenceMethod method) {
    if (method == InterferenceMethod::brute_force) {
        return reduce_to_atom(full_pipeline_unnormalized(params, dressed, amplitude)).rho_gg.real();
    }
    const double i2 = std::norm(amplitude);
    const auto [f_plus, f_minus] = form_factors(dressed, params.phi);
    const double norm = 1.0 + i2 * (std::norm(f_plus) + std::norm(f_minus));
    const double c2 = dressed.cos2_theta();
    const double s2t = dressed.sin_2theta();
    const double cos_phi = std::cos(params.phi);
    const double half = std::cos(0.5 * params.phi);
    const double bracket = 1.0 + s2t * (cos_phi - 1.0) + cos_phi * s2t * s2t;
    return (half * half + 0.25 * i2 * c2 * c2 * bracket) / norm;
}

double visibility_from_extrema(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                               InterferenceMethod method) {
    const auto [p0, ppi] = extrema(params, dressed, amplitude, method);
    if (p0 + ppi == 0.0) {
        throw Error(ErrorKind::degenerate, "P_g(0) + P_g(pi) = 0");
    }
    return (p0 - ppi) / (p0 + ppi);
}

double visibility(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                  InterferenceMethod method) {
    if (method == InterferenceMethod::brute_force) {
        return visibility_from_extrema(params, dressed, amplitude, method);
    }
    const auto [x, s] = visibility_terms(params, dressed, amplitude);
    return (1.0 + x * s * (1.0 - s)) / (1.0 + x * (1.0 - s));
}

double visibility_difference(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                             InterferenceMethod method) {
    if (method == InterferenceMethod::brute_force) {
        const auto [p0, ppi] = extrema(params, dressed, amplitude, method);
        if (p0 + ppi == 0.0) {
            throw Error(ErrorKind::degenerate, "P_g(0) + P_g(pi) = 0");
        }
        return 2.0 * ppi / (p0 + ppi);
    }
    const auto [x, s] = visibility_terms(params, dressed, amplitude);
    return x * (1.0 - s) * (1.0 - s) / (1.0 + x * (1.0 - s));
}

InterferenceResult::InterferenceResult(double p_g_, double visibility_, double delta_v_,
                                       InterferenceMethod method_)
    : p_g(p_g_), visibility(visibility_), delta_v(delta_v_), method(method_) {
    constexpr double slack = 1e-12;
    if (!(p_g >= -slack && p_g <= 1.0 + slack) || !(visibility >= -slack && visibility <= 1.0 + slack)) {
        throw Error(ErrorKind::invariant, "P_g or V outside [0, 1]");
    }
}

InterferenceResult interference(const LabParams& params, const DressedParams& dressed, Complex amplitude) {
    constexpr auto method = InterferenceMethod::brute_force;
    return {detection_probability(params, dressed, amplitude, method),
            visibility(params, dressed, amplitude, method),
            visibility_difference(params, dressed, amplitude, method), method};
}

double phase_extrema_violation(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                               int grid_points) {
    constexpr auto method = InterferenceMethod::brute_force;
    const auto [p0, ppi] = extrema(params, dressed, amplitude, method);
    double violation = 0.0;
    for (int k = 0; k < grid_points; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / (grid_points - 1);
        const double p = detection_probability(at_phase(params, phi), dressed, amplitude, method);
        violation = std::max({violation, p - p0, ppi - p});
    }
    return violation;
}

}  // namespace accelramsey
