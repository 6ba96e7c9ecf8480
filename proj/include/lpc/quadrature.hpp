#pragma once

#include "lpc/core.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace lpc::quad {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order; rules are built once and cached.
const GaussRule& gauss_legendre(int order);

/// Composite Gauss-Legendre on [a, b].
template <class F>
double composite_gauss(F&& f, double a, double b, int panels, int order = 8) {
    const GaussRule& rule = gauss_legendre(order);
    const double width = (b - a) / panels;
    double total = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double mid = a + (k + 0.5) * width;
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            panel += rule.weights[i] * f(mid + 0.5 * width * rule.nodes[i]);
        total += 0.5 * width * panel;
    }
    return total;
}

/// Integral of f over (0, inf) written in the variable x = log t:
/// int f(e^x) e^x dx over [x_lo, x_hi] with `nodes` Gauss points in total.
template <class F>
double log_variable_gauss(F&& f, double x_lo, double x_hi, int nodes) {
    constexpr int order = 20;
    const int panels = std::max(1, nodes / order);
    return composite_gauss(
        [&](double x) {
            const double t = std::exp(x);
            return f(t) * t;
        },
        x_lo, x_hi, panels, order);
}

inline constexpr double kDefaultTol = 1e-12;

/// Adaptive double-exponential quadrature on a finite interval; endpoint
/// algebraic singularities are fine.
template <class F>
double finite(F&& f, double a, double b, double tol = kDefaultTol) {
    if (!(b > a)) return 0.0;
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, tol);
}

/// Adaptive quadrature on [a, inf) for integrands with (at least) algebraic decay.
template <class F>
double to_infinity(F&& f, double a, double tol = kDefaultTol) {
    thread_local boost::math::quadrature::exp_sinh<double> integrator;
    // far nodes can form 0 * inf from a decayed profile times a huge power
    auto guarded = [&](double t) {
        const double v = f(t);
        return (!std::isfinite(v) && t > 1e30) ? 0.0 : v;
    };
    try {
        return integrator.integrate(guarded, a, kInf, tol);
    } catch (const std::exception& e) {
        fail(ErrorKind::NumericFailure, std::string("quadrature to infinity: ") + e.what());
    }
}

/// int_0^R f(t) dt split at the given interior breakpoints; R may be +inf.
template <class F>
double radial(F&& f, std::span<const double> breaks, double R, double tol = kDefaultTol) {
    std::vector<double> cuts{0.0};
    for (double b : breaks)
        if (b > 0.0 && b < R) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += finite(f, cuts[i], cuts[i + 1], tol);
    const double last = cuts.back();
    if (std::isinf(R)) {
        if (last == 0.0) {
            total += finite(f, 0.0, 1.0, tol);
            total += to_infinity(f, 1.0, tol);
        } else {
            total += to_infinity(f, last, tol);
        }
    } else {
        total += finite(f, last, R, tol);
    }
    return total;
}

}  // namespace lpc::quad
