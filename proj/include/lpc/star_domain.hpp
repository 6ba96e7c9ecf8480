#pragma once

#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"

#include <vector>

namespace lpc {

struct Interval {
    double a = 0.0;
    double b = 0.0;
};

inline constexpr std::size_t kMaxIntervals = 16;

/// Domain given along each grid direction u by the radii {t >= 0 : t u in M},
/// a sorted union of disjoint closed intervals.
class CompactDomain {
public:
    CompactDomain(GridPtr grid, std::vector<std::vector<Interval>> rays);

    static CompactDomain from_body(const ConvexBody& K, GridPtr grid = nullptr);

    /// {|f| >= t} by marching along each ray with the given step (default h/4
    /// for grid fields) and bisecting the crossings.
    static CompactDomain from_level(const Field& f, double t, GridPtr grid = nullptr, double step = 0.0);

    int dim() const { return grid_->dim(); }
    const SphereGrid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    const std::vector<Interval>& ray(std::size_t i) const { return rays_[i]; }
    std::size_t size() const { return rays_.size(); }
    double r_max() const { return r_max_; }

    /// sum over intervals of (b^m - a^m)
    double ray_power(std::size_t i, double m) const;

private:
    GridPtr grid_;
    std::vector<std::vector<Interval>> rays_;
    double r_max_ = 0.0;
};

double domain_volume(const CompactDomain& M);

/// Star-shaped rearrangement with radial (sum (b^n - a^n))^{1/n} on every ray.
CompactDomain sm_symmetrize(const CompactDomain& M);
std::vector<double> sm_radial(const CompactDomain& M);

double domain_moment(const CompactDomain& M, double p, const Vec& xi);

/// domain_moment at every node of `dirs`.
std::vector<double> domain_moments(const CompactDomain& M, double p, const SphereGrid& dirs);

}  // namespace lpc
