#include "accelramsey/quadrature.hpp"

#include "accelramsey/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace accelramsey::quadrature {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    Complex value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<Complex(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const Complex f_center = f(center);
    Complex kronrod = kKronrodWeights[7] * f_center;
    Complex gauss = kGaussWeights[3] * f_center;
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const Complex sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const std::function<Complex(double)>& f, std::span<const double> breakpoints,
                 double abs_tol, double rel_tol, int max_subdivisions) {
    if (breakpoints.size() < 2 || !std::is_sorted(breakpoints.begin(), breakpoints.end())) {
        throw Error(ErrorKind::domain, "quadrature needs an increasing breakpoint list");
    }
    std::priority_queue<Panel> panels;
    Complex total = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] == breakpoints[i]) {
            continue;
        }
        Panel p = gauss_kronrod(f, breakpoints[i], breakpoints[i + 1]);
        total += p.value;
        error += p.error;
        panels.push(p);
    }

    auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
    while (error > target() && static_cast<int>(panels.size()) < max_subdivisions) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            panels.push(worst);
            break;
        }
        const Panel left = gauss_kronrod(f, worst.lo, mid);
        const Panel right = gauss_kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the rounding accumulated by incremental updates.
    Result result;
    result.subdivisions = static_cast<int>(panels.size());
    Complex sum = 0.0;
    double err = 0.0;
    while (!panels.empty()) {
        sum += panels.top().value;
        err += panels.top().error;
        panels.pop();
    }
    result.value = sum;
    result.error = err;
    result.converged = err <= std::max(abs_tol, rel_tol * std::abs(sum));
    return result;
}

}  // namespace accelramsey::quadrature
