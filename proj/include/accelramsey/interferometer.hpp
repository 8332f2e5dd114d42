#pragma once

// Ramsey pipeline R1 -> phase -> cavity C -> R2 on the truncated space
// {|0,g>, |0,e>, |1,g>, |1,e>}, the reduced atomic state, and fringe
// visibility.

#include "accelramsey/physics.hpp"
#include "accelramsey/specfun.hpp"

#include <string_view>

namespace accelramsey {

struct AtomFieldState {
    Complex amp_0g;
    Complex amp_0e;
    Complex amp_1g;
    Complex amp_1e;

    static AtomFieldState ground() { return {1.0, 0.0, 0.0, 0.0}; }

    double norm2() const noexcept;
    /// Throws Error{degenerate} for the zero vector.
    AtomFieldState normalized() const;
};

struct AtomDensityMatrix {
    Complex rho_gg;
    Complex rho_ge;  // <g|rho|e>
    Complex rho_eg;
    Complex rho_ee;

    double trace() const noexcept { return (rho_gg + rho_ee).real(); }
    double min_eigenvalue() const noexcept;
    /// Hermitian, unit trace and positive semidefinite within `tol`.
    bool is_physical(double tol = 1e-12) const noexcept;
};

enum class RamseyZone { R1, R2 };
enum class InterferenceMethod { closed_form, brute_force };

std::string_view to_string(InterferenceMethod method) noexcept;

/// pi/2 rotation of the atom; identity on the photon number.
/// R1: g -> (g + e)/sqrt2, e -> (-g + e)/sqrt2.
/// R2: g -> (g - e)/sqrt2, e -> (g + e)/sqrt2.
AtomFieldState ramsey_pulse(const AtomFieldState& state, RamseyZone zone);

/// e-amplitudes pick up e^{i phi}.
AtomFieldState accumulate_phase(const AtomFieldState& state, double phi);

/// First-order cavity map U = 1 - i I cos^2(theta) a^dag pi_- - i I^* cos^2(theta) a pi_+,
/// applied in the dressed basis |+> = s|g> + c|e>, |-> = c|g> - s|e>.
/// Throws Error{domain} when |I| cos^2(theta) >= 0.3 and Error{truncation}
/// when the input would feed the n = 2 sector.
AtomFieldState cavity_interaction(const AtomFieldState& state, Complex amplitude, const DressedParams& dressed);

/// R2 . cavity . phase(params.phi) . R1 applied to |0,g>, without renormalizing.
AtomFieldState full_pipeline_unnormalized(const LabParams& params, const DressedParams& dressed, Complex amplitude);

/// Same, normalized to unit norm.
AtomFieldState full_pipeline(const LabParams& params, const DressedParams& dressed, Complex amplitude);

/// Partial trace over the field, divided by the state norm.
AtomDensityMatrix reduce_to_atom(const AtomFieldState& state);

/// F_+-(theta, phi) = 1/2 cos^2(theta) (e^{i phi/2} cos(theta) + e^{-i phi/2} sin(theta)) (cos(theta) +- sin(theta)).
struct FormFactors {
    Complex f_plus;
    Complex f_minus;
};

FormFactors form_factors(const DressedParams& dressed, double phi);

/// Ground-state detection probability at params.phi. brute_force is the
/// normalized pipeline; closed_form is the printed closed expression taken
/// as written (unclamped, it can leave [0, 1]).
double detection_probability(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                             InterferenceMethod method);

/// (P_g(0) - P_g(pi)) / (P_g(0) + P_g(pi)) with the chosen P_g.
double visibility_from_extrema(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                               InterferenceMethod method);

/// brute_force: visibility_from_extrema on the pipeline. closed_form: the
/// printed visibility formula in terms of delta_omega, Delta and kappa.
double visibility(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                  InterferenceMethod method);

/// delta V = V(laser off, I = 0, kappa = 0) - V(a). The reference is exactly
/// 1, so this is 1 - V, evaluated without cancellation.
double visibility_difference(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                             InterferenceMethod method);

struct InterferenceResult {
    double p_g;
    double visibility;
    double delta_v;
    InterferenceMethod method;

    /// Throws Error{invariant} unless p_g, visibility in [0, 1] (1e-12 slack).
    InterferenceResult(double p_g, double visibility, double delta_v, InterferenceMethod method);
};

/// Brute-force P_g, V and delta V in one validated record.
InterferenceResult interference(const LabParams& params, const DressedParams& dressed, Complex amplitude);

/// Largest violation of "P_g(0) is the maximum and P_g(pi) the minimum"
/// over an n-point phase grid (0 when the extrema sit where expected).
double phase_extrema_violation(const LabParams& params, const DressedParams& dressed, Complex amplitude,
                               int grid_points = 721);

}  // namespace accelramsey
