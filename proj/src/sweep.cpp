#include "accelramsey/sweep.hpp"

#include "accelramsey/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

namespace accelramsey {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kAmplitudeAgreement = 1e-6;
constexpr double kPipelineAgreement = 1e-10;
constexpr double kFig3Anchor = 5e17;

double relative_difference(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double relative_difference(Complex a, Complex b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

std::string sci(Complex z) { return "(" + sci(z.real()) + "," + sci(z.imag()) + ")"; }

template <typename T>
void flag_deviation(std::vector<std::string>& flags, std::string_view what, std::string_view left_name, T left,
                    std::string_view right_name, T right, double tol) {
    const double rel = relative_difference(left, right);
    if (rel > tol) {
        flags.push_back("deviation " + std::string(what) + ": " + std::string(left_name) + "=" + sci(left) + " " +
                        std::string(right_name) + "=" + sci(right) + " rel=" + sci(rel));
    }
}

LabParams with_sweep_value(LabParams params, SweepVariable variable, double value) {
    if (variable == SweepVariable::accel) {
        params.accel = value;
    } else {
        params.kappa = value;
    }
    return params;
}

std::string window_label(const WindowTime& window) {
    if (window.is_infinite()) {
        return "T=inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "T=%gns", window.value() * 1e9);
    return buf;
}

void add_density_check(SweepOutput& out) {
    std::size_t bad = 0;
    double worst = 0.0;
    for (const auto& r : out.records) {
        const double closure = std::abs(r.rho.trace() - 1.0);
        worst = std::max(worst, closure);
        if (!r.rho.is_physical(1e-12)) {
            ++bad;
        }
    }
    out.checks.push_back({"density_matrix_physical", bad == 0, true,
                          std::to_string(bad) + " of " + std::to_string(out.records.size()) +
                              " points unphysical; max |tr - 1| = " + sci(worst)});
}

// Strictly increasing delta_v in grid order within each series. Leading
// points that underflow to exactly zero are counted, not compared.
void add_monotone_check(SweepOutput& out, std::string_view series) {
    double previous = -kInfinity;
    std::size_t count = 0;
    std::size_t underflow = 0;
    std::string detail;
    bool passed = true;
    for (const auto& r : out.records) {
        if (r.series != series) {
            continue;
        }
        ++count;
        if (r.delta_v == 0.0 && previous <= 0.0) {
            ++underflow;
            previous = 0.0;
            continue;
        }
        if (!(r.delta_v > previous) && passed) {
            passed = false;
            detail = "delta_v not increasing at sweep value " + sci(r.sweep_value);
        }
        previous = r.delta_v;
    }
    if (underflow == count) {
        passed = false;
        detail = "delta_v is zero at every point";
    }
    if (passed) {
        detail = std::to_string(count) + " points, strictly increasing";
        if (underflow > 0) {
            detail += " after " + std::to_string(underflow) + " leading points that underflow to 0";
        }
    }
    out.checks.push_back({"monotone_delta_v[" + std::string(series) + "]", passed, true, detail});
}

std::vector<SweepRecord> run_series(const RunConfig& config, const LabParams& base, const std::string& series) {
    std::vector<LabParams> points;
    points.reserve(config.grid.size());
    for (double x : config.grid) {
        points.push_back(with_sweep_value(base, config.variable, x));
    }
    return evaluate_all(points, config, std::vector<std::string>(points.size(), series), config.grid);
}

}  // namespace

bool SweepOutput::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const SweepCheck& c) { return c.passed || !c.hard; });
}

SweepRecord evaluate_point(const LabParams& raw, const RunConfig& config, std::string series, double sweep_value) {
    SweepRecord r;
    r.series = std::move(series);
    r.variable = config.variable;
    r.sweep_value = sweep_value;
    r.inputs = raw;
    r.conventions = config.conventions;
    r.source = config.amplitude_source;

    validate(raw);
    const LabParams p = to_angular(raw, config.conventions.freq);
    r.dressed = dressed_params(p, config.conventions.detuning);
    r.flags = validity_warnings(p, r.dressed);

    if (p.accel > 0.0) {
        r.ratios = kinematic_ratios(p);
        const AmplitudeResult closed =
            p.window_T.is_infinite() ? amplitude_infinite_window(p) : amplitude_closed_form(p);
        r.i_closed = closed.value;
        if (closed.underflow_guard) {
            r.flags.emplace_back("amplitude underflow guard: nu_k c/a > 700");
        }
        if (config.compute_quadrature && !p.window_T.is_infinite()) {
            try {
                const AmplitudeResult quad = amplitude_quadrature(p, config.quadrature);
                r.i_quad = quad.value;
                r.quad_est_error = quad.est_error;
                flag_deviation(r.flags, "i_closed_vs_i_quad", "closed", r.i_closed, "quad", quad.value,
                               kAmplitudeAgreement);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::convergence) {
                    throw;
                }
                r.flags.emplace_back(std::string("quadrature unavailable: ") + e.what());
            }
        }
        r.p_thermal = prob_thermal_limit(p);
        r.p_finite_time = p.window_T.is_infinite() ? r.p_thermal : prob_finite_time(p);
        r.p_high_accel = prob_high_acceleration(p);
        if (config.amplitude_source == AmplitudeSource::closed_form) {
            r.i_used = r.i_closed;
        } else if (config.amplitude_source == AmplitudeSource::quadrature) {
            if (!r.i_quad) {
                throw Error(ErrorKind::domain, "quadrature amplitude unavailable at this point");
            }
            r.i_used = *r.i_quad;
        } else {
            r.i_used = interferometer_amplitude(p, AmplitudeSource::finite_time, config.quadrature).value;
        }
        for (auto& w : amplitude_warnings(p, std::norm(r.i_used))) {
            r.flags.push_back(std::move(w));
        }
    } else {
        r.ratios = {kInfinity, kInfinity, kInfinity};
    }

    using M = InterferenceMethod;
    r.pg_brute = detection_probability(p, r.dressed, r.i_used, M::brute_force);
    r.pg_closed = detection_probability(p, r.dressed, r.i_used, M::closed_form);
    r.v_brute = visibility(p, r.dressed, r.i_used, M::brute_force);
    r.v_closed = visibility(p, r.dressed, r.i_used, M::closed_form);
    r.delta_v = visibility_difference(p, r.dressed, r.i_used, M::brute_force);
    r.delta_v_closed = visibility_difference(p, r.dressed, r.i_used, M::closed_form);
    r.rho = reduce_to_atom(full_pipeline_unnormalized(p, r.dressed, r.i_used));

    flag_deviation(r.flags, "pg", "brute", r.pg_brute, "closed", r.pg_closed, kPipelineAgreement);
    flag_deviation(r.flags, "v", "brute", r.v_brute, "closed", r.v_closed, kPipelineAgreement);
    flag_deviation(r.flags, "delta_v", "brute", r.delta_v, "closed", r.delta_v_closed, kPipelineAgreement);
    if (!r.rho.is_physical(1e-12)) {
        r.flags.emplace_back("density matrix not physical: min eigenvalue " + sci(r.rho.min_eigenvalue()));
    }
    return r;
}

std::vector<SweepRecord> evaluate_all(const std::vector<LabParams>& points, const RunConfig& config,
                                      const std::vector<std::string>& series, const std::vector<double>& sweep_values) {
    const std::size_t n = points.size();
    std::vector<SweepRecord> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = evaluate_point(points[i], config, series[i], sweep_values[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::min(threads, n); ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    // First failure in grid order, independent of scheduling.
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

SweepOutput run_amplitude(const RunConfig& config) {
    config.validate();
    SweepOutput out{"amplitude", run_series(config, config.params, window_label(config.params.window_T)), {}};
    std::size_t flagged = 0;
    for (const auto& r : out.records) {
        flagged += std::any_of(r.flags.begin(), r.flags.end(),
                               [](const std::string& f) { return f.starts_with("deviation i_closed"); });
    }
    out.checks.push_back({"amplitude_closed_vs_quadrature", flagged == 0, false,
                          std::to_string(flagged) + " of " + std::to_string(out.records.size()) +
                              " points deviate beyond " + sci(kAmplitudeAgreement)});
    add_density_check(out);
    return out;
}

SweepOutput run_visibility(const RunConfig& config) {
    config.validate();
    SweepOutput out{"visibility", run_series(config, config.params, window_label(config.params.window_T)), {}};
    add_density_check(out);
    return out;
}

SweepOutput run_fig3(const RunConfig& config, const std::vector<FrequencyConvention>& conventions) {
    config.validate();
    if (config.variable != SweepVariable::accel) {
        throw Error(ErrorKind::config, "fig3 sweeps the acceleration");
    }
    SweepOutput out{"fig3", {}, {}};
    const WindowTime windows[] = {WindowTime::seconds(1e-9), WindowTime::infinite()};
    std::vector<std::string> names;
    for (const auto conv : conventions) {
        RunConfig run = config;
        run.conventions.freq = conv;
        for (const auto& window : windows) {
            LabParams base = config.params;
            base.window_T = window;
            const std::string name = conventions.size() > 1
                                         ? std::string(to_string(conv)) + "/" + window_label(window)
                                         : window_label(window);
            auto records = run_series(run, base, name);
            out.records.insert(out.records.end(), records.begin(), records.end());
            names.push_back(name);
        }
        LabParams anchor = config.params;
        anchor.accel = kFig3Anchor;
        anchor.window_T = windows[0];
        const double finite = evaluate_point(anchor, run, "", kFig3Anchor).delta_v;
        anchor.window_T = windows[1];
        const double infinite = evaluate_point(anchor, run, "", kFig3Anchor).delta_v;
        out.checks.push_back({"anchor_a5e17[" + std::string(to_string(conv)) + "]", true, false,
                              "delta_v(T=1ns)=" + sci(finite) + " delta_v(T=inf)=" + sci(infinite) +
                                  (finite > infinite ? " finite window above" : " finite window below")});
    }
    for (const auto& name : names) {
        add_monotone_check(out, name);
    }
    add_density_check(out);
    return out;
}

std::vector<CaptionCheck> check_fig4_captions(const LabParams& raw) {
    const double detuning_mhz = std::abs(raw.omega_L - raw.omega) / 1e6;
    if (detuning_mhz == 0.0) {
        throw Error(ErrorKind::zero_detuning, "caption check needs omega_L != omega");
    }
    std::vector<CaptionCheck> checks;
    for (const auto& [kappa, quoted] : kFig4Captions) {
        const double computed = 2.0 * kappa * kappa / detuning_mhz;
        checks.push_back({kappa, quoted, computed, std::abs(computed - quoted) <= kCaptionToleranceMhz});
    }
    return checks;
}

SweepOutput run_fig4(const RunConfig& config) {
    config.validate();
    if (config.variable != SweepVariable::accel) {
        throw Error(ErrorKind::config, "fig4 sweeps the acceleration");
    }
    SweepOutput out{"fig4", {}, {}};
    const auto captions = check_fig4_captions(config.params);
    for (const auto& c : captions) {
        char buf[120];
        std::snprintf(buf, sizeof buf, "kappa=%g MHz: 2 kappa^2/|Delta| = %.4f MHz, caption %g MHz", c.kappa_mhz,
                      c.computed_mhz, c.quoted_mhz);
        out.checks.push_back({"caption_pair[kappa=" + sci(c.kappa_mhz) + "]", c.passed, true, buf});
    }
    if (!out.ok()) {
        throw Error(ErrorKind::invariant, "fig4 caption light shifts disagree with 2 kappa^2/|Delta|");
    }

    std::vector<LabParams> points;
    std::vector<std::string> series;
    std::vector<double> values;
    for (const auto& c : captions) {
        LabParams base = config.params;
        base.kappa = c.kappa_mhz * 1e6;
        base.window_T = WindowTime::seconds(1e-9);
        char name[32];
        std::snprintf(name, sizeof name, "kappa=%gMHz", c.kappa_mhz);
        for (double a : config.grid) {
            points.push_back(with_sweep_value(base, SweepVariable::accel, a));
            series.emplace_back(name);
            values.push_back(a);
        }
    }
    out.records = evaluate_all(points, config, series, values);

    const std::size_t n = config.grid.size();
    bool ordered = true;
    std::string detail = "delta_v increases with kappa at all " + std::to_string(n) + " grid points";
    for (std::size_t k = 1; k < captions.size() && ordered; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& lo = out.records[(k - 1) * n + i];
            const auto& hi = out.records[k * n + i];
            if (!(hi.delta_v > lo.delta_v)) {
                ordered = false;
                detail = "ordering fails between " + lo.series + " and " + hi.series + " at a=" + sci(lo.sweep_value);
                break;
            }
        }
    }
    out.checks.push_back({"kappa_ordering", ordered, true, detail});
    char caption_series[32];
    for (const auto& c : captions) {
        std::snprintf(caption_series, sizeof caption_series, "kappa=%gMHz", c.kappa_mhz);
        add_monotone_check(out, caption_series);
    }
    add_density_check(out);
    return out;
}

}  // namespace accelramsey
