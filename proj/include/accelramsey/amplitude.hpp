#pragma once

// First-order acceleration-radiation amplitude
//
//   I(a) = lambda_k * int dtau exp[-(i nu_k c/a) e^{-a tau/c} - i omega tau - a tau/c - |tau|/T]
//
// and the transition probabilities derived from it. The cos^2(theta)
// dressing factor is not part of I(a); the interferometer applies it.

#include "accelramsey/physics.hpp"
#include "accelramsey/specfun.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace accelramsey {

enum class AmplitudeMethod { closed_form, quadrature, asymptotic };

std::string_view to_string(AmplitudeMethod method) noexcept;

struct AmplitudeResult {
    Complex value;
    AmplitudeMethod method = AmplitudeMethod::closed_form;
    double est_error = 0.0;
    // nu_k c / a above 700: returned as exact zero.
    bool underflow_guard = false;
};

struct QuadratureConfig {
    double tau_span_in_T = 40.0;
    int max_subdivisions = 50000;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;

    void validate() const;
};

/// The tau integrand of I(a), including the lambda_k prefactor.
Complex amplitude_integrand(const LabParams& params, double tau);

/// Incomplete-gamma closed form, taken literally:
///
///   I = -i (lambda/nu) (a/nu c)^{i w} e^{-pi w/2}
///       [ (a/nu c)^{-beta} e^{i pi beta/2} Gamma(1+mu_-, alpha)
///       + (a/nu c)^{beta} e^{-i pi beta/2} gamma(1+mu_+, alpha) ]
///
/// with w = omega c/a, alpha = nu c/a, beta = c/(aT), mu_+- = i w +- beta, and
/// real second argument alpha. Requires accel > 0 and a finite window.
/// Note that this does not equal the tau integral; amplitude_quadrature is
/// the reference for that, and selfcheck reports the gap.
AmplitudeResult amplitude_closed_form(const LabParams& params);

/// T -> infinity limit of the closed form, where gamma + Gamma collapse to
/// Gamma(1 + i w): I = -i (lambda/nu) (a/nu c)^{i w} e^{-pi w/2} Gamma(1 + i w).
AmplitudeResult amplitude_infinite_window(const LabParams& params);

/// Direct numerical evaluation of the tau integral (finite window only).
///
/// tau > 0 is integrated on the real line, truncated at tau_span_in_T * T.
/// For tau < 0 the substitution x = (nu c/a) e^{-a tau/c} turns the chirp
/// into int_alpha^inf x^{i w - beta} e^{-i x} dx, which converges only
/// conditionally; it is evaluated on the deformed path x = alpha - i y where
/// the integrand decays like e^{-y}. No special function is involved.
AmplitudeResult amplitude_quadrature(const LabParams& params, const QuadratureConfig& config = {});

/// The bracket of the finite-time expansion,
/// 1 - beta [2 ln(a/nu c) + psi(1 + i w) + psi(1 - i w)], before taking the
/// real part.
Complex finite_time_bracket(const LabParams& params);

/// |I|^2 to first order in c/(aT).
double prob_finite_time(const LabParams& params);

/// (lambda/nu)^2 x/(e^x - 1) with x = 2 pi omega c/a: the c/(aT) -> 0 limit.
double prob_thermal_limit(const LabParams& params);

/// |I|^2 with alpha -> 0:
/// (lambda/nu)^2 (a/nu c)^{-2 beta} e^{-pi w} |Gamma(1 + mu_-)|^2.
double prob_high_acceleration(const LabParams& params);

/// Regime diagnostics for a computed probability.
std::vector<std::string> amplitude_warnings(const LabParams& params, double probability);

/// Which route supplies I(a) to the interferometer.
enum class AmplitudeSource { finite_time, closed_form, quadrature };

std::string_view to_string(AmplitudeSource source) noexcept;

/// Amplitude handed to the Ramsey pipeline. Observables only depend on
/// |I|^2, so finite_time returns sqrt(prob_finite_time) on the real axis
/// (prob_thermal_limit for the infinite window).
AmplitudeResult interferometer_amplitude(const LabParams& params, AmplitudeSource source,
                                         const QuadratureConfig& config = {});

}  // namespace accelramsey
