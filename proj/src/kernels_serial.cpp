#include "kernels_detail.hpp"

#include <algorithm>

namespace lpc::kernels {

double superlevel_fraction(int n, double v0, double v1, double v2, double v3, double t) {
    if (n == 2) {
        if (t <= v0) return 1.0;
        if (t >= v2) return 0.0;
        if (t <= v1) return 1.0 - (t - v0) * (t - v0) / ((v1 - v0) * (v2 - v0));
        return (v2 - t) * (v2 - t) / ((v2 - v0) * (v2 - v1));
    }
    if (t <= v0) return 1.0;
    if (t >= v3) return 0.0;
    if (t <= v1) return 1.0 - (t - v0) * (t - v0) * (t - v0) / ((v1 - v0) * (v2 - v0) * (v3 - v0));
    if (t >= v2) return (v3 - t) * (v3 - t) * (v3 - t) / ((v3 - v0) * (v3 - v1) * (v3 - v2));
    const double lo = v1 - v0, hi = v3 - v2, range = v3 - v0;
    if (std::max(lo, hi) < 1e-8 * range) {
        const double a = 0.5 * (v0 + v1), b = 0.5 * (v2 + v3);
        const double s = std::clamp((t - a) / (b - a), 0.0, 1.0);
        return 1.0 - s * s * (3.0 - 2.0 * s);
    }
    if (lo >= hi) {
        const double below = (t - v0) * (t - v0) * (t - v0) / ((v1 - v0) * (v2 - v0) * (v3 - v0)) -
                             (t - v1) * (t - v1) * (t - v1) / ((v1 - v0) * (v2 - v1) * (v3 - v1));
        return std::clamp(1.0 - below, 0.0, 1.0);
    }
    const double above = (v3 - t) * (v3 - t) * (v3 - t) / ((v3 - v0) * (v3 - v1) * (v3 - v2)) -
                         (v2 - t) * (v2 - t) * (v2 - t) / ((v3 - v2) * (v2 - v1) * (v2 - v0));
    return std::clamp(above, 0.0, 1.0);
}

void abs_moments_serial(const PointSet& pts, const PointSet& dirs, double p, std::span<double> out) {
    for (std::size_t j = 0; j < dirs.size(); ++j) out[j] = detail::abs_moment_one(pts, dirs, p, j);
}

void superlevel_measure_serial(const SimplexSet& s, std::span<const double> ts, std::span<double> out) {
    for (std::size_t k = 0; k < ts.size(); ++k) out[k] = detail::superlevel_one(s, ts[k]);
}

void polar_min_serial(const PointSet& normals, const PointSet& dirs, std::span<double> out) {
    for (std::size_t j = 0; j < dirs.size(); ++j) out[j] = detail::polar_min_one(normals, dirs, j);
}

}  // namespace lpc::kernels
