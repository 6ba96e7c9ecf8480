#pragma once

#include "lpc/core.hpp"
#include "lpc/kernels.hpp"

namespace lpc::kernels::detail {

inline double abs_moment_one(const PointSet& pts, const PointSet& dirs, double p, std::size_t j) {
    const double dx = dirs.x[j], dy = dirs.y[j];
    double acc = 0.0;
    const std::size_t m = pts.size();
    if (pts.n == 2) {
        for (std::size_t i = 0; i < m; ++i) acc += pts.w[i] * abs_pow(pts.x[i] * dx + pts.y[i] * dy, p);
    } else {
        const double dz = dirs.z[j];
        for (std::size_t i = 0; i < m; ++i)
            acc += pts.w[i] * abs_pow(pts.x[i] * dx + pts.y[i] * dy + pts.z[i] * dz, p);
    }
    return acc;
}

inline double superlevel_one(const SimplexSet& s, double t) {
    double acc = 0.0;
    const std::size_t m = s.size();
    if (s.n == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            if (t <= s.v0[i]) acc += 1.0;
            else if (t < s.v2[i]) acc += superlevel_fraction(2, s.v0[i], s.v1[i], s.v2[i], 0.0, t);
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            if (t <= s.v0[i]) acc += 1.0;
            else if (t < s.v3[i]) acc += superlevel_fraction(3, s.v0[i], s.v1[i], s.v2[i], s.v3[i], t);
        }
    }
    return acc * s.measure;
}

inline double polar_min_one(const PointSet& normals, const PointSet& dirs, std::size_t j) {
    const double dx = dirs.x[j], dy = dirs.y[j], dz = dirs.n == 3 ? dirs.z[j] : 0.0;
    double best = kInf;
    const std::size_t m = normals.size();
    for (std::size_t i = 0; i < m; ++i) {
        double c = normals.x[i] * dx + normals.y[i] * dy;
        if (normals.n == 3) c += normals.z[i] * dz;
        if (c > 0) {
            const double v = normals.w[i] / c;
            if (v < best) best = v;
        }
    }
    return best;
}

}  // namespace lpc::kernels::detail
