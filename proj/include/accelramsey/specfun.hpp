#pragma once

// Complex-order gamma-family functions with real second argument.
//
// All functions are pure. Branch convention: principal logarithm, and for
// real x > 0 the power x^s means exp(s * ln x).

#include <complex>

namespace accelramsey {

using Complex = std::complex<double>;

namespace specfun {

inline constexpr double kDefaultRelTol = 1e-15;
inline constexpr double kPoleTol = 1e-14;

/// Analytic log-gamma with its branch cut on the negative real axis.
/// Throws Error{pole} at non-positive integers.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// Upper incomplete gamma Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt.
///
/// Lower gamma by power series when x < |s| + 1, upper gamma by modified
/// Lentz continued fraction otherwise; the other one follows from
/// gamma(s,x) + Gamma(s,x) = Gamma(s). For Re s <= 0 the series is used as
/// the analytic continuation of gamma(s, x).
Complex upper_incomplete_gamma(Complex s, double x);

/// Lower incomplete gamma gamma(s, x) = int_0^x t^{s-1} e^{-t} dt, Re s > 0.
Complex lower_incomplete_gamma(Complex s, double x);

/// Principal-branch logarithms of the two incomplete gammas, evaluated
/// without forming possibly over/underflowing intermediate values. The
/// imaginary part is only defined modulo 2*pi.
Complex log_upper_incomplete_gamma(Complex s, double x);
Complex log_lower_incomplete_gamma(Complex s, double x);

/// Digamma psi(z). Shifts z upward by recurrence until |z| >= 10 and
/// Re z >= 0, then applies an 8-term asymptotic Bernoulli series.
Complex digamma(Complex z);

}  // namespace specfun
}  // namespace accelramsey
