#pragma once

#include "accelramsey/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace test {

using accelramsey::Complex;

inline double rel(Complex a, Complex b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double rel(double a, double b) { return rel(Complex{a}, Complex{b}); }

}  // namespace test
