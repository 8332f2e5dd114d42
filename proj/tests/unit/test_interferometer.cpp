#include "accelramsey/error.hpp"
#include "accelramsey/interferometer.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace accelramsey;
using test::rel;

namespace {

constexpr Complex kI{0.0, 1.0};

DressedParams angle(double theta) {
    DressedParams d;
    d.cos_theta = std::cos(theta);
    d.sin_theta = std::sin(theta);
    return d;
}

LabParams with_phase(double phi) {
    LabParams p;
    p.phi = phi;
    return p;
}

}  // namespace

TEST_CASE("pulses are unitary and invert each other") {
    const AtomFieldState s{{0.3, 0.1}, {-0.2, 0.5}, {0.05, 0.0}, {0.0, -0.02}};
    for (auto zone : {RamseyZone::R1, RamseyZone::R2}) {
        CHECK(ramsey_pulse(s, zone).norm2() == doctest::Approx(s.norm2()).epsilon(1e-15));
    }
    const AtomFieldState back = ramsey_pulse(ramsey_pulse(s, RamseyZone::R1), RamseyZone::R2);
    CHECK(std::abs(back.amp_0g - s.amp_0g) < 1e-15);
    CHECK(std::abs(back.amp_1e - s.amp_1e) < 1e-15);
}

TEST_CASE("zero amplitude leaves an ideal fringe") {
    const DressedParams d = angle(0.7);
    for (double phi : {0.0, 1.0, M_PI, 5.0}) {
        const auto s = full_pipeline_unnormalized(with_phase(phi), d, 0.0);
        CHECK(std::norm(s.amp_0g) == doctest::Approx(std::pow(std::cos(0.5 * phi), 2)).epsilon(1e-14));
        CHECK(s.amp_1g == Complex{});
        CHECK(s.amp_1e == Complex{});
    }
    CHECK(visibility(LabParams{}, d, 0.0, InterferenceMethod::brute_force) == 1.0);
    CHECK(visibility_difference(LabParams{}, d, 0.0, InterferenceMethod::brute_force) == 0.0);
}

TEST_CASE("pipeline coefficients match the form factors") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const DressedParams d = angle(1.5 * u(rng) + 0.02);
        const double phi = 2.0 * M_PI * u(rng);
        const Complex amp{0.1 * (u(rng) - 0.5), 0.1 * (u(rng) - 0.5)};
        const auto s = full_pipeline_unnormalized(with_phase(phi), d, amp);
        const Complex global = std::polar(1.0, 0.5 * phi);
        const auto [fp, fm] = form_factors(d, phi);
        CHECK(std::abs(s.amp_0g / global - std::cos(0.5 * phi)) < 1e-12);
        CHECK(std::abs(s.amp_0e / global - kI * std::sin(0.5 * phi)) < 1e-12);
        CHECK(std::abs(s.amp_1g / global + kI * amp * fm) < 1e-12);
        CHECK(std::abs(s.amp_1e / global - kI * amp * fp) < 1e-12);
    }
}

TEST_CASE("norm grows by the one-photon weight") {
    const DressedParams d = angle(0.4);
    const Complex amp{0.05, 0.02};
    for (double phi : {0.0, 0.8, 2.5, M_PI}) {
        const auto s = full_pipeline_unnormalized(with_phase(phi), d, amp);
        const auto [fp, fm] = form_factors(d, phi);
        const double weight = std::norm(amp) * (std::norm(fp) + std::norm(fm));
        CHECK(s.norm2() >= 1.0);
        CHECK(weight <= std::norm(amp) * std::pow(d.cos_theta, 4));
        CHECK(std::abs(s.norm2() - 1.0 - weight) <= 1e-15);
        CHECK(full_pipeline(with_phase(phi), d, amp).norm2() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("reduced density matrix is physical") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const DressedParams d = angle(1.5 * u(rng) + 0.02);
        const Complex amp = std::polar(0.2 * u(rng), 2.0 * M_PI * u(rng));
        const auto rho = reduce_to_atom(full_pipeline_unnormalized(with_phase(6.0 * u(rng)), d, amp));
        CHECK(std::abs(rho.rho_ge - std::conj(rho.rho_eg)) <= 1e-14);
        CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
        CHECK(rho.min_eigenvalue() >= -1e-12);
        CHECK(rho.is_physical());
    }
}

TEST_CASE("P_g + P_e = 1 and 2 pi periodicity") {
    const DressedParams d = angle(0.3);
    const Complex amp{0.04, -0.01};
    for (int k = 0; k < 36; ++k) {
        const double phi = 2.0 * M_PI * k / 36.0;
        const auto rho = reduce_to_atom(full_pipeline_unnormalized(with_phase(phi), d, amp));
        CHECK(std::abs(rho.rho_gg.real() + rho.rho_ee.real() - 1.0) <= 1e-12);
        const double p0 = detection_probability(with_phase(phi), d, amp, InterferenceMethod::brute_force);
        const double p1 = detection_probability(with_phase(phi + 2.0 * M_PI), d, amp, InterferenceMethod::brute_force);
        CHECK(std::abs(p0 - p1) <= 1e-14);
    }
}

TEST_CASE("visibility closed form tends to 1 linearly in |I|^2") {
    LabParams p;
    const DressedParams d = dressed_params(p, DetuningConvention::magnitude);
    double previous = 0.0;
    for (double mag = 1e-2; mag > 1e-5; mag /= 4.0) {
        const double slope = visibility_difference(p, d, mag, InterferenceMethod::closed_form) / (mag * mag);
        if (previous != 0.0) {
            CHECK(rel(slope, previous) < 2e-3);
        }
        previous = slope;
    }
}

TEST_CASE("brute-force visibility extrema") {
    const DressedParams d = angle(0.45);
    const Complex amp{0.03, 0.01};
    CHECK(phase_extrema_violation(LabParams{}, d, amp) <= 1e-12);
    const double v = visibility(LabParams{}, d, amp, InterferenceMethod::brute_force);
    const double dv = visibility_difference(LabParams{}, d, amp, InterferenceMethod::brute_force);
    CHECK(rel(1.0 - v, dv) < 1e-9);
    const auto result = interference(LabParams{}, d, amp);
    CHECK(result.p_g <= 1.0);
    CHECK(result.delta_v == dv);
}

TEST_CASE("closed-form detection probability differs only in the sign term") {
    const DressedParams d = angle(0.3);
    const Complex amp{0.05, 0.0};
    for (double phi : {0.3, 1.7, 2.9}) {
        const LabParams p = with_phase(phi);
        const double brute = detection_probability(p, d, amp, InterferenceMethod::brute_force);
        const double closed = detection_probability(p, d, amp, InterferenceMethod::closed_form);
        const auto [fp, fm] = form_factors(d, phi);
        const double n = 1.0 + std::norm(amp) * (std::norm(fp) + std::norm(fm));
        const double s2t = d.sin_2theta();
        const double sign_term = 0.5 * std::norm(amp) * std::pow(d.cos_theta, 4) * std::cos(phi) * s2t * s2t / n;
        CHECK(std::abs(closed - sign_term - brute) < 1e-15);
    }
}

TEST_CASE("guards") {
    const DressedParams d = angle(0.1);
    CHECK_THROWS_AS(cavity_interaction(AtomFieldState::ground(), 0.5, d), Error);
    const AtomFieldState plus_photon{0.0, 0.0, d.sin_theta, d.cos_theta};
    CHECK_THROWS_AS(cavity_interaction(plus_photon, 0.01, d), Error);
    CHECK_THROWS_AS(AtomFieldState{}.normalized(), Error);
    CHECK_THROWS_AS(InterferenceResult(1.5, 0.5, 0.5, InterferenceMethod::brute_force), Error);
}
