#include "accelramsey/amplitude.hpp"

#include "accelramsey/error.hpp"
#include "accelramsey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace accelramsey {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kUnderflowAlpha = 700.0;

void require_accelerated(const LabParams& params) {
    validate(params);
    if (!(params.accel > 0.0)) {
        throw Error(ErrorKind::domain, "amplitude requires accel > 0");
    }
}

// x / (e^x - 1), well conditioned at both ends.
double planck_factor(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    return x / std::expm1(x);
}

}  // namespace

std::string_view to_string(AmplitudeMethod method) noexcept {
    switch (method) {
        case AmplitudeMethod::closed_form: return "closed_form";
        case AmplitudeMethod::quadrature: return "quadrature";
        case AmplitudeMethod::asymptotic: return "asymptotic";
    }
    return "unknown";
}

std::string_view to_string(AmplitudeSource source) noexcept {
    switch (source) {
        case AmplitudeSource::finite_time: return "finite_time";
        case AmplitudeSource::closed_form: return "closed_form";
        case AmplitudeSource::quadrature: return "quadrature";
    }
    return "unknown";
}

void QuadratureConfig::validate() const {
    if (!(tau_span_in_T >= 10.0)) {
        throw Error(ErrorKind::config, "tau_span_in_T must be >= 10");
    }
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
        throw Error(ErrorKind::config, "quadrature tolerances and budget must be positive");
    }
}

Complex amplitude_integrand(const LabParams& params, double tau) {
    const double u = params.accel * tau / constants::c;
    const double alpha = params.nu_k * constants::c / params.accel;
    const double window = std::abs(tau) * params.window_T.inverse();
    const Complex exponent = -kI * alpha * std::exp(-u) - kI * params.omega * tau - u - window;
    return params.lambda_k * std::exp(exponent);
}

AmplitudeResult amplitude_closed_form(const LabParams& params) {
    require_accelerated(params);
    if (params.window_T.is_infinite()) {
        throw Error(ErrorKind::domain, "closed form needs a finite window; use amplitude_infinite_window");
    }
    AmplitudeResult result;
    result.method = AmplitudeMethod::closed_form;
    const auto [w, alpha, beta] = kinematic_ratios(params);
    if (params.lambda_k == 0.0) {
        return result;
    }
    if (alpha > kUnderflowAlpha) {
        result.underflow_guard = true;
        return result;
    }
    const double log_ratio = -std::log(alpha);  // ln(a / nu c)
    const Complex common = std::log(params.lambda_k / params.nu_k) + kI * w * log_ratio - 0.5 * kPi * w;
    const Complex mu_minus{-beta, w};
    const Complex mu_plus{beta, w};

    const Complex upper_log = common + (-beta * log_ratio + kI * 0.5 * kPi * beta) +
                              specfun::log_upper_incomplete_gamma(1.0 + mu_minus, alpha);
    const Complex lower_log = common + (beta * log_ratio - kI * 0.5 * kPi * beta) +
                              specfun::log_lower_incomplete_gamma(1.0 + mu_plus, alpha);

    result.value = -kI * (std::exp(upper_log) + std::exp(lower_log));
    const double scale = 1.0 + std::max(std::abs(upper_log), std::abs(lower_log));
    result.est_error = 1e-13 * scale * std::abs(result.value);
    return result;
}

AmplitudeResult amplitude_infinite_window(const LabParams& params) {
    require_accelerated(params);
    AmplitudeResult result;
    result.method = AmplitudeMethod::asymptotic;
    if (params.lambda_k == 0.0) {
        return result;
    }
    const auto [w, alpha, beta] = kinematic_ratios(params);
    const double log_ratio = -std::log(alpha);
    const Complex log_value = std::log(params.lambda_k / params.nu_k) + kI * w * log_ratio - 0.5 * kPi * w +
                              specfun::log_gamma(Complex{1.0, w});
    result.value = -kI * std::exp(log_value);
    result.est_error = 1e-13 * (1.0 + std::abs(log_value)) * std::abs(result.value);
    return result;
}

AmplitudeResult amplitude_quadrature(const LabParams& params, const QuadratureConfig& config) {
    require_accelerated(params);
    config.validate();
    if (params.window_T.is_infinite()) {
        throw Error(ErrorKind::domain, "quadrature is only defined for a finite window");
    }
    AmplitudeResult result;
    result.method = AmplitudeMethod::quadrature;
    if (params.lambda_k == 0.0) {
        return result;
    }
    const auto [w, alpha, beta] = kinematic_ratios(params);
    const double span = config.tau_span_in_T;

    // tau > 0 in u = a tau / c; tau <= span * T maps to u <= span / beta.
    const double u_max = std::min(span / beta, span);
    const auto positive = [&](double u) {
        return std::exp(Complex{-(1.0 + beta) * u, -alpha * std::exp(-u) - w * u});
    };
    // Panel cap in u: min(T, 2 pi / (4 omega), c / (4 a)) plus the local chirp rate at u = 0.
    const double width = std::min({1.0 / beta, 0.5 * kPi / w, 0.25, 0.5 * kPi / (alpha + w)});
    const double chirp_end = std::min(u_max, std::log1p(alpha) + 5.0);
    std::vector<double> u_breaks;
    const auto n_chirp = static_cast<std::size_t>(std::ceil(chirp_end / width));
    u_breaks.reserve(n_chirp + 2);
    for (std::size_t i = 0; i < n_chirp; ++i) {
        u_breaks.push_back(static_cast<double>(i) * chirp_end / static_cast<double>(n_chirp));
    }
    u_breaks.push_back(chirp_end);
    if (u_max > chirp_end) {
        u_breaks.push_back(u_max);
    }
    const double pos_scale = params.lambda_k * constants::c / params.accel;
    const double budget_abs = config.abs_tol / pos_scale;
    const auto pos = quadrature::integrate(positive, u_breaks, 0.5 * budget_abs, config.rel_tol,
                                           config.max_subdivisions);
    const double pos_truncation = std::exp(-(1.0 + beta) * u_max) / (1.0 + beta);

    // tau < 0 on the deformed contour x = alpha - i y.
    const Complex s1{-beta, w};
    const auto negative = [&](double y) { return std::exp(s1 * std::log(Complex{1.0, -y / alpha}) - y); };
    const double y_max = span + 0.5 * kPi * w;
    std::vector<double> y_breaks{0.0};
    for (double y = std::min(alpha, 1.0); y < y_max; y *= 2.0) {
        y_breaks.push_back(y);
    }
    y_breaks.push_back(y_max);
    const double neg_scale = params.lambda_k / params.nu_k;
    const auto neg = quadrature::integrate(negative, y_breaks, 0.5 * config.abs_tol / neg_scale, config.rel_tol,
                                           config.max_subdivisions);
    const double neg_truncation = std::exp(0.5 * kPi * w - y_max);

    const Complex neg_prefactor = neg_scale * (-kI) * std::exp(Complex{0.0, -alpha});
    result.value = pos_scale * pos.value + neg_prefactor * neg.value;
    result.est_error = pos_scale * (pos.error + pos_truncation) + neg_scale * (neg.error + neg_truncation);
    const double target = std::max(config.rel_tol * std::abs(result.value), config.abs_tol);
    if ((!pos.converged || !neg.converged) && result.est_error > target) {
        throw Error(ErrorKind::convergence, "amplitude quadrature exhausted its subdivision budget (error " +
                                                std::to_string(result.est_error) + ")");
    }
    return result;
}

Complex finite_time_bracket(const LabParams& params) {
    require_accelerated(params);
    const auto [w, alpha, beta] = kinematic_ratios(params);
    const Complex digamma_sum = specfun::digamma(Complex{1.0, w}) + specfun::digamma(Complex{1.0, -w});
    return 1.0 - beta * (2.0 * -std::log(alpha) + digamma_sum);
}

double prob_thermal_limit(const LabParams& params) {
    require_accelerated(params);
    const double w = params.omega * constants::c / params.accel;
    const double coupling = params.lambda_k / params.nu_k;
    return coupling * coupling * planck_factor(2.0 * kPi * w);
}

double prob_finite_time(const LabParams& params) {
    return prob_thermal_limit(params) * finite_time_bracket(params).real();
}

double prob_high_acceleration(const LabParams& params) {
    require_accelerated(params);
    if (params.lambda_k == 0.0) {
        return 0.0;
    }
    const auto [w, alpha, beta] = kinematic_ratios(params);
    const double coupling = params.lambda_k / params.nu_k;
    const double log_gamma_re = specfun::log_gamma(Complex{1.0 - beta, -w}).real();
    const double log_p = 2.0 * std::log(coupling) + 2.0 * beta * std::log(alpha) - kPi * w + 2.0 * log_gamma_re;
    const double p = std::exp(log_p);
    if (params.window_T.is_infinite()) {
        // Gamma(1 - i w) Gamma(1 + i w) = pi w / sinh(pi w).
        const double identity =
            coupling * coupling * 2.0 * kPi * w * std::exp(-2.0 * kPi * w) / -std::expm1(-2.0 * kPi * w);
        if (std::abs(p - identity) > 1e-10 * std::abs(identity)) {
            throw Error(ErrorKind::invariant, "Gamma-product identity check failed in prob_high_acceleration");
        }
    }
    return p;
}

std::vector<std::string> amplitude_warnings(const LabParams& params, double probability) {
    std::vector<std::string> warnings;
    if (probability > 0.1) {
        warnings.emplace_back("perturbative: |I|^2 > 0.1");
    }
    if (params.accel > 0.0) {
        const auto [w, alpha, beta] = kinematic_ratios(params);
        if (beta > 0.5) {
            warnings.emplace_back("finite-time expansion: c/(aT) > 0.5");
        }
        if (alpha > 0.3) {
            warnings.emplace_back("high-acceleration limit: nu_k c/a > 0.3");
        }
    }
    return warnings;
}

AmplitudeResult interferometer_amplitude(const LabParams& params, AmplitudeSource source,
                                         const QuadratureConfig& config) {
    switch (source) {
        case AmplitudeSource::finite_time: {
            const double p =
                params.window_T.is_infinite() ? prob_thermal_limit(params) : prob_finite_time(params);
            if (p < 0.0) {
                throw Error(ErrorKind::domain, "finite-time expansion gives a negative probability");
            }
            AmplitudeResult result;
            result.method = AmplitudeMethod::asymptotic;
            result.value = std::sqrt(p);
            return result;
        }
        case AmplitudeSource::closed_form:
            return params.window_T.is_infinite() ? amplitude_infinite_window(params)
                                                 : amplitude_closed_form(params);
        case AmplitudeSource::quadrature:
            return amplitude_quadrature(params, config);
    }
    throw Error(ErrorKind::domain, "unknown amplitude source");
}

}  // namespace accelramsey
