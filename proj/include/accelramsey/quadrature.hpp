#pragma once

#include <complex>
#include <functional>
#include <span>

namespace accelramsey::quadrature {

using Complex = std::complex<double>;

struct Result {
    Complex value;
    double error = 0.0;     // estimated absolute error
    int subdivisions = 0;   // panels in the final partition
    bool converged = false;
};

/// Global adaptive Gauss-Kronrod (7/15) integration of a complex integrand.
///
/// `breakpoints` is an increasing list of at least two points; each interval
/// between consecutive breakpoints is an initial panel. The panel with the
/// largest error estimate is bisected until the total error drops below
/// max(abs_tol, rel_tol * |value|) or the panel budget is exhausted.
Result integrate(const std::function<Complex(double)>& f, std::span<const double> breakpoints,
                 double abs_tol, double rel_tol, int max_subdivisions);

}  // namespace accelramsey::quadrature
