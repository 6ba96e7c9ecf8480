#pragma once

#include <span>
#include <vector>

namespace lpc::kernels {

/// Weighted point cloud in structure-of-arrays layout; z is empty for n = 2.
struct PointSet {
    int n = 2;
    std::vector<double> x, y, z, w;

    std::size_t size() const { return x.size(); }
    void push(double px, double py, double weight) {
        x.push_back(px);
        y.push_back(py);
        w.push_back(weight);
    }
    void push(double px, double py, double pz, double weight) {
        push(px, py, weight);
        z.push_back(pz);
    }
};

/// Piecewise-linear simplices (triangles for n = 2, tetrahedra for n = 3) with
/// vertex values sorted ascending and a common simplex measure.
struct SimplexSet {
    int n = 2;
    double measure = 0.0;
    std::vector<double> v0, v1, v2, v3;

    std::size_t size() const { return v0.size(); }
};

/// Fraction of a simplex where the linear interpolant is >= t.
double superlevel_fraction(int n, double v0, double v1, double v2, double v3, double t);

// out[j] = sum_i w_i |<x_i, d_j>|^p
void abs_moments_serial(const PointSet& pts, const PointSet& dirs, double p, std::span<double> out);
void abs_moments_parallel(const PointSet& pts, const PointSet& dirs, double p, std::span<double> out);

// out[k] = measure of {interpolant >= t_k}
void superlevel_measure_serial(const SimplexSet& s, std::span<const double> ts, std::span<double> out);
void superlevel_measure_parallel(const SimplexSet& s, std::span<const double> ts, std::span<double> out);

// out[j] = min over i with <n_i, d_j> > 0 of w_i / <n_i, d_j>; +inf if no such i
void polar_min_serial(const PointSet& normals, const PointSet& dirs, std::span<double> out);
void polar_min_parallel(const PointSet& normals, const PointSet& dirs, std::span<double> out);

bool parallel_enabled();

inline void abs_moments(const PointSet& pts, const PointSet& dirs, double p, std::span<double> out) {
    abs_moments_parallel(pts, dirs, p, out);
}
inline void superlevel_measure(const SimplexSet& s, std::span<const double> ts, std::span<double> out) {
    superlevel_measure_parallel(s, ts, out);
}
inline void polar_min(const PointSet& normals, const PointSet& dirs, std::span<double> out) {
    polar_min_parallel(normals, dirs, out);
}

}  // namespace lpc::kernels
