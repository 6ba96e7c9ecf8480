#include "lpc/star_domain.hpp"

#include <algorithm>
#include <cmath>

namespace lpc {

CompactDomain::CompactDomain(GridPtr grid, std::vector<std::vector<Interval>> rays)
    : grid_(std::move(grid)), rays_(std::move(rays)) {
    if (!grid_) fail(ErrorKind::InvalidArgument, "domain needs a sphere grid");
    if (rays_.size() != grid_->size()) fail(ErrorKind::InvalidArgument, "one interval list per grid node is required");
    for (const auto& ray : rays_) {
        if (ray.size() > kMaxIntervals) fail(ErrorKind::InvalidArgument, "too many intervals on a ray");
        double prev = -1.0;
        for (const Interval& iv : ray) {
            if (!(iv.a >= 0 && iv.b > iv.a && std::isfinite(iv.b)))
                fail(ErrorKind::InvalidArgument, "intervals need 0 <= a < b < inf");
            if (iv.a <= prev) fail(ErrorKind::InvalidArgument, "intervals must be sorted and disjoint");
            prev = iv.b;
        }
        if (!ray.empty()) r_max_ = std::max(r_max_, ray.back().b);
    }
    if (!(r_max_ > 0)) fail(ErrorKind::InvalidArgument, "domain is empty");
}

double CompactDomain::ray_power(std::size_t i, double m) const {
    double s = 0.0;
    for (const Interval& iv : rays_[i]) s += std::pow(iv.b, m) - std::pow(iv.a, m);
    return s;
}

CompactDomain CompactDomain::from_body(const ConvexBody& K, GridPtr grid) {
    if (!grid) grid = grid_of(K);
    std::vector<std::vector<Interval>> rays(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) rays[i] = {{0.0, K.radial(grid->node(i))}};
    return CompactDomain(grid, std::move(rays));
}

CompactDomain CompactDomain::from_level(const Field& f, double t, GridPtr grid, double step) {
    if (!(t > 0)) fail(ErrorKind::InvalidArgument, "level threshold must be positive");
    const int n = f.dim();
    if (!grid) grid = SphereGrid::standard(n);
    if (grid->dim() != n) fail(ErrorKind::InvalidArgument, "sphere grid dimension mismatch");
    double reach = 0.0;
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        for (int a = 0; a < n; ++a) {
            const double far = std::max(std::abs(g.lo(a)), std::abs(g.lo(a) + (g.shape[a] - 1) * g.h));
            reach += far * far;
        }
        reach = std::sqrt(reach);
        if (step <= 0) step = g.h / 4;
    } else {
        const RadialField& rf = f.as_radial();
        if (!std::isfinite(rf.extent())) fail(ErrorKind::InvalidArgument, "level sets need a field with finite support");
        double w = 0.0;
        for (std::size_t i = 0; i < grid->size(); ++i) w = std::max(w, rf.gauge.radial(grid->node(i)));
        reach = 1.01 * rf.extent() * w;
        if (step <= 0) step = reach / 1024;
    }
    const int steps = static_cast<int>(std::ceil(reach / step));
    std::vector<std::vector<Interval>> rays(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec u = grid->node(i);
        auto above = [&](double s) { return std::abs(f.value(s * u)) >= t; };
        auto bisect = [&](double lo, double hi) {
            const bool left = above(lo);
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (above(mid) == left ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        };
        auto& ray = rays[i];
        bool inside = above(0.0);
        double start = 0.0, prev = 0.0;
        for (int k = 1; k <= steps; ++k) {
            const double s = reach * k / steps;
            const bool now = above(s);
            if (now != inside) {
                const double cut = bisect(prev, s);
                if (inside) {
                    if (cut > start) ray.push_back({start, cut});
                } else {
                    start = cut;
                }
                inside = now;
            }
            prev = s;
        }
        if (inside) ray.push_back({start, reach});
        if (ray.size() > kMaxIntervals) fail(ErrorKind::InvalidArgument, "level set has too many intervals on a ray");
    }
    return CompactDomain(grid, std::move(rays));
}

double domain_volume(const CompactDomain& M) {
    const int n = M.dim();
    double v = 0.0;
    for (std::size_t i = 0; i < M.size(); ++i) v += M.grid().weight(i) * M.ray_power(i, n);
    return v / n;
}

std::vector<double> sm_radial(const CompactDomain& M) {
    const int n = M.dim();
    std::vector<double> rho(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) rho[i] = std::pow(M.ray_power(i, n), 1.0 / n);
    return rho;
}

CompactDomain sm_symmetrize(const CompactDomain& M) {
    const auto rho = sm_radial(M);
    std::vector<std::vector<Interval>> rays(M.size());
    for (std::size_t i = 0; i < M.size(); ++i)
        if (rho[i] > 0) rays[i] = {{0.0, rho[i]}};
    return CompactDomain(M.grid_ptr(), std::move(rays));
}

namespace {

kernels::PointSet moment_points(const CompactDomain& M, double p) {
    const int n = M.dim();
    kernels::PointSet pts;
    pts.n = n;
    for (std::size_t i = 0; i < M.size(); ++i) {
        const double c = M.ray_power(i, n + p) / (n + p);
        if (c == 0) continue;
        const Vec u = M.grid().node(i);
        const double w = M.grid().weight(i) * c;
        if (n == 2) pts.push(u(0), u(1), w);
        else pts.push(u(0), u(1), u(2), w);
    }
    return pts;
}

}  // namespace

double domain_moment(const CompactDomain& M, double p, const Vec& xi) {
    if (!(p >= 1)) fail(ErrorKind::InvalidArgument, "p must be >= 1");
    if (xi.size() != M.dim()) fail(ErrorKind::InvalidArgument, "direction has wrong dimension");
    kernels::PointSet dir;
    dir.n = M.dim();
    if (dir.n == 2) dir.push(xi(0), xi(1), 1.0);
    else dir.push(xi(0), xi(1), xi(2), 1.0);
    double out = 0.0;
    kernels::abs_moments(moment_points(M, p), dir, p, {&out, 1});
    return out;
}

std::vector<double> domain_moments(const CompactDomain& M, double p, const SphereGrid& dirs) {
    if (!(p >= 1)) fail(ErrorKind::InvalidArgument, "p must be >= 1");
    if (dirs.dim() != M.dim()) fail(ErrorKind::InvalidArgument, "sphere grid dimension mismatch");
    std::vector<double> out(dirs.size());
    kernels::abs_moments(moment_points(M, p), dirs.points(), p, out);
    return out;
}

}  // namespace lpc
