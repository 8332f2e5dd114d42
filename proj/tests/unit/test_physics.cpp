#include "accelramsey/error.hpp"
#include "accelramsey/physics.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace accelramsey;
using test::rel;

TEST_CASE("window time") {
    CHECK(WindowTime::seconds(1e-9).value() == 1e-9);
    CHECK(WindowTime::seconds(std::numeric_limits<double>::infinity()).is_infinite());
    CHECK(WindowTime::infinite().inverse() == 0.0);
    CHECK_THROWS_AS(WindowTime::seconds(0.0), Error);
    CHECK_THROWS_AS(WindowTime::seconds(-1.0), Error);
}

TEST_CASE("frequency conventions") {
    LabParams p;
    const LabParams hz = to_angular(p, FrequencyConvention::hertz);
    CHECK(hz.omega == doctest::Approx(2.0 * M_PI * p.omega));
    CHECK(hz.kappa == doctest::Approx(2.0 * M_PI * p.kappa));
    CHECK(hz.accel == p.accel);
    const LabParams same = to_angular(p, FrequencyConvention::angular);
    CHECK(same.omega == p.omega);
}

TEST_CASE("dressed parameters at the default point") {
    const DressedParams d = dressed_params(LabParams{}, DetuningConvention::magnitude);
    CHECK(d.delta == 5e8);
    CHECK(d.delta_omega == doctest::Approx(1.6e8));
    CHECK(d.cos2_theta() == doctest::Approx(0.16e9 / (2.0 * 0.66e9)).epsilon(1e-14));
    CHECK(std::abs(d.cos_theta * d.cos_theta + d.sin_theta * d.sin_theta - 1.0) <= 1e-14);
    CHECK(d.rabi == doctest::Approx(std::sqrt(25e16 + 16e16)));
}

TEST_CASE("signed detuning") {
    const DressedParams d = dressed_params(LabParams{}, DetuningConvention::keep_sign);
    CHECK(d.delta == -5e8);
    CHECK(d.delta_omega == doctest::Approx(-1.6e8));
    CHECK(d.cos2_theta() == doctest::Approx(0.16 / 1.32).epsilon(1e-12));
    LabParams close;
    close.omega_L = 9.5e8;
    close.kappa = 1e8;
    const DressedParams c = dressed_params(close, DetuningConvention::keep_sign);
    CHECK(std::abs(c.cos2_theta() + c.sin_theta * c.sin_theta - 1.0) <= 1e-14);
}

TEST_CASE("dressed normalization holds everywhere") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        LabParams p;
        p.omega = 1e9;
        p.omega_L = 1e9 * (1.0 + (u(rng) < 0.5 ? -1.0 : 1.0) * (0.01 + u(rng)));
        p.kappa = 3e8 * u(rng);
        const DressedParams d = dressed_params(p, DetuningConvention::magnitude);
        CHECK(std::abs(d.cos_theta * d.cos_theta + d.sin_theta * d.sin_theta - 1.0) <= 1e-14);
    }
}

TEST_CASE("dressed splitting approaches Delta + delta_omega as kappa / Delta shrinks") {
    // Omega - (Delta + delta_omega) = -2 kappa^4 / Delta^3 + O(kappa^6).
    LabParams p;
    double previous = 0.0;
    for (double kappa : {4e7, 2e7, 1e7}) {
        p.kappa = kappa;
        const DressedParams d = dressed_params(p, DetuningConvention::magnitude);
        const double gap = d.rabi - (d.delta + d.delta_omega);
        const double scaled = gap / std::pow(kappa / d.delta, 4) / d.delta;
        CHECK(scaled == doctest::Approx(-2.0).epsilon(2e-2));
        if (previous != 0.0) {
            CHECK(std::abs(gap) < std::abs(previous) / 10.0);
        }
        previous = gap;
    }
}

TEST_CASE("zero detuning and invalid parameters") {
    LabParams p;
    p.omega_L = p.omega;
    CHECK_THROWS_AS(dressed_params(p, DetuningConvention::magnitude), Error);
    LabParams q;
    q.nu_k = -1.0;
    CHECK_THROWS_AS(validate(q), Error);
    q = LabParams{};
    q.accel = -5.0;
    CHECK_THROWS_AS(validate(q), Error);
}

TEST_CASE("validity warnings") {
    LabParams p;
    p.lambda_k = 0.5e9;
    p.kappa = 3e8;
    const auto warnings = validity_warnings(p, dressed_params(p, DetuningConvention::magnitude));
    CHECK(warnings.size() == 2);
    LabParams q;
    CHECK(validity_warnings(q, dressed_params(q, DetuningConvention::magnitude)).empty());
}

TEST_CASE("Rindler trajectory") {
    const auto pt = rindler_trajectory(1e-9, 5e17);
    CHECK(rel(pt.t, 1.5325224385763e-9) < 1e-12);
    CHECK(rel(pt.z, 0.49335010412670775) < 1e-14);
    const auto origin = rindler_trajectory(0.0, 5e17);
    CHECK(origin.t == 0.0);
    CHECK(rel(origin.z, constants::c * constants::c / 5e17) < 1e-15);
    CHECK_THROWS_AS(rindler_trajectory(1.0, 0.0), Error);
}

TEST_CASE("Rindler hyperbola invariant") {
    for (double a : {1e16, 5e17, 1e20}) {
        const double horizon = constants::c * constants::c / a;
        for (int k = -50; k <= 50; ++k) {
            const double tau = 2.0 * constants::c / a * k / 50.0;
            const auto pt = rindler_trajectory(tau, a);
            const double ct = constants::c * pt.t;
            CHECK(rel((pt.z - ct) * (pt.z + ct), horizon * horizon) <= 1e-12);
        }
    }
}

TEST_CASE("Unruh temperature") {
    CHECK(rel(unruh_temperature(1e17), 4.05501352274522979e-4) < 1e-14);
    CHECK(rel(unruh_temperature(2.46608302140261062e20), 1.0) < 1e-14);
    CHECK(unruh_temperature(0.0) == 0.0);
}

TEST_CASE("cavity length") {
    CHECK(rel(cavity_length_estimate(5e17, 1e-9), 0.31359906837934422) < 1e-14);
    // Small a tau / c: the nonrelativistic value.
    CHECK(rel(cavity_length_estimate(10.0, 1.0), 5.0) < 1e-12);
    CHECK(cavity_length_estimate(0.0, 1.0) == 0.0);
}

TEST_CASE("kinematic ratios") {
    const auto r = kinematic_ratios(LabParams{});
    CHECK(rel(r.w, 1e9 * constants::c / 5e17) < 1e-15);
    CHECK(rel(r.beta, constants::c / (5e17 * 1e-9)) < 1e-15);
    LabParams p;
    p.window_T = WindowTime::infinite();
    CHECK(kinematic_ratios(p).beta == 0.0);
}
