#include "accelramsey/specfun.hpp"

#include "accelramsey/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace accelramsey::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 200000;

// B_{2k} for k = 1..8.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
};

bool near_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol || z.real() > tol) {
        return false;
    }
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

std::string describe(Complex z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

Complex checked(Complex value, const char* what) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error(ErrorKind::domain, std::string(what) + " is not representable (overflow)");
    }
    return value;
}

// Stirling series for log Gamma(w), valid for Re w >= 12.
Complex stirling(Complex w) {
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex term = inv;
    Complex series = 0.0;
    for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
        const double two_k = 2.0 * static_cast<double>(k + 1);
        series += kBernoulli[k] / (two_k * (two_k - 1.0)) * term;
        term *= inv2;
    }
    return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// log of s^-1 x^s e^-x sum_n x^n / ((s+1)...(s+n)), i.e. log gamma(s, x)
// continued analytically in s.
Complex log_lower_series(Complex s, double x) {
    Complex term = 1.0 / s;
    Complex sum = term;
    for (int n = 1; n < kMaxIterations; ++n) {
        const Complex denom = s + static_cast<double>(n);
        if (std::abs(denom) < kPoleTol) {
            throw Error(ErrorKind::pole, "incomplete gamma series hit a pole at s = " + describe(s));
        }
        term *= x / denom;
        sum += term;
        if (std::abs(denom) > x && std::abs(term) <= kEps * 0.25 * std::abs(sum)) {
            return s * std::log(x) - x + std::log(sum);
        }
    }
    throw Error(ErrorKind::convergence, "incomplete gamma series did not converge for s = " + describe(s));
}

// Modified Lentz evaluation of the Legendre continued fraction for Gamma(s, x), x > 0.
Complex log_upper_fraction(Complex s, double x) {
    Complex b = x + 1.0 - s;
    Complex c = 1.0 / kTiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double di = static_cast<double>(i);
        const Complex an = -di * (di - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = b + an / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        const Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) <= kEps) {
            return s * std::log(x) - x + std::log(h);
        }
    }
    throw Error(ErrorKind::convergence,
                "incomplete gamma continued fraction did not converge for s = " + describe(s));
}

// log(exp(a) - exp(b)) without forming exp(a) or exp(b).
Complex log_difference(Complex a, Complex b) {
    if (a.real() >= b.real()) {
        return a + std::log(1.0 - std::exp(b - a));
    }
    return b + std::log(std::exp(a - b) - 1.0);
}

void require_real_argument(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::domain, "incomplete gamma requires finite x >= 0, got " + std::to_string(x));
    }
}

}  // namespace

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z, kPoleTol)) {
        throw Error(ErrorKind::pole, "log_gamma pole at z = " + describe(z));
    }
    Complex shift = 0.0;
    Complex w = z;
    while (w.real() < 12.0) {
        shift += std::log(w);
        w += 1.0;
    }
    return stirling(w) - shift;
}

Complex gamma(Complex z) { return checked(std::exp(log_gamma(z)), "Gamma(z)"); }

Complex log_upper_incomplete_gamma(Complex s, double x) {
    require_real_argument(x);
    if (x == 0.0) {
        if (s.real() <= 0.0) {
            throw Error(ErrorKind::divergence, "Gamma(s, 0) diverges for Re s <= 0, s = " + describe(s));
        }
        return log_gamma(s);
    }
    if (x >= std::abs(s) + 1.0 || near_nonpositive_integer(s, 1e-6)) {
        return log_upper_fraction(s, x);
    }
    return log_difference(log_gamma(s), log_lower_series(s, x));
}

Complex log_lower_incomplete_gamma(Complex s, double x) {
    require_real_argument(x);
    if (s.real() <= 0.0) {
        throw Error(ErrorKind::domain, "gamma(s, x) requires Re s > 0, s = " + describe(s));
    }
    if (x == 0.0) {
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    if (x < std::abs(s) + 1.0) {
        return log_lower_series(s, x);
    }
    return log_difference(log_gamma(s), log_upper_fraction(s, x));
}

Complex upper_incomplete_gamma(Complex s, double x) {
    return checked(std::exp(log_upper_incomplete_gamma(s, x)), "Gamma(s, x)");
}

Complex lower_incomplete_gamma(Complex s, double x) {
    const Complex log_value = log_lower_incomplete_gamma(s, x);
    if (std::isinf(log_value.real()) && log_value.real() < 0.0) {
        return 0.0;
    }
    return checked(std::exp(log_value), "gamma(s, x)");
}

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z, kPoleTol)) {
        throw Error(ErrorKind::pole, "digamma pole at z = " + describe(z));
    }
    Complex shift = 0.0;
    Complex w = z;
    while (std::abs(w) < 10.0 || w.real() < 0.0) {
        shift += 1.0 / w;
        w += 1.0;
    }
    const Complex inv2 = 1.0 / (w * w);
    Complex power = inv2;
    Complex series = 0.0;
    for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
        const double two_k = 2.0 * static_cast<double>(k + 1);
        series += kBernoulli[k] / two_k * power;
        power *= inv2;
    }
    return std::log(w) - 0.5 / w - series - shift;
}

}  // namespace accelramsey::specfun
