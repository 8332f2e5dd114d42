#include "accelramsey/quadrature.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <vector>

using namespace accelramsey;
using test::rel;

TEST_CASE("polynomials are exact") {
    const std::vector<double> breaks{0.0, 1.0};
    const auto r = quadrature::integrate([](double x) { return Complex{x * x * x, 2.0 * x}; }, breaks, 1e-15,
                                         1e-15, 10);
    CHECK(r.converged);
    CHECK(rel(r.value, {0.25, 1.0}) < 1e-15);
}

TEST_CASE("oscillatory complex exponential") {
    const std::vector<double> breaks{0.0, 10.0};
    const auto r = quadrature::integrate([](double x) { return std::exp(Complex{0.0, 20.0 * x}); }, breaks, 1e-14,
                                         1e-13, 2000);
    const Complex exact = (std::exp(Complex{0.0, 200.0}) - 1.0) / Complex{0.0, 20.0};
    CHECK(r.converged);
    CHECK(rel(r.value, exact) < 1e-12);
}

TEST_CASE("endpoint singularity needs subdivision") {
    const std::vector<double> breaks{0.0, 1.0};
    const auto r = quadrature::integrate([](double x) { return Complex{1.0 / std::sqrt(x)}; }, breaks, 1e-12, 1e-10,
                                         5000);
    CHECK(r.converged);
    CHECK(r.subdivisions > 10);
    CHECK(rel(r.value, 2.0) < 1e-9);
}

TEST_CASE("budget exhaustion is reported") {
    const std::vector<double> breaks{0.0, 1.0};
    const auto r = quadrature::integrate([](double x) { return Complex{1.0 / std::sqrt(x)}; }, breaks, 1e-16, 1e-16,
                                         3);
    CHECK_FALSE(r.converged);
    CHECK(r.error > 0.0);
}
