#include "lpc/moment.hpp"

#include "lpc/params.hpp"
#include "lpc/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace lpc {

const char* to_string(MomentSource s) noexcept {
    switch (s) {
        case MomentSource::Body: return "body";
        case MomentSource::Domain: return "domain";
        case MomentSource::Field: return "field";
    }
    return "?";
}

namespace {

constexpr double kDegenerate = 1e-12;

void check_p(double p) {
    if (!(p >= 1 && std::isfinite(p))) fail(ErrorKind::InvalidArgument, "p must be >= 1");
}

// int_0^1 |alpha + w (beta - alpha)|^p dw
double segment_power_mean(double alpha, double beta, double p) {
    const double a = std::abs(alpha), b = std::abs(beta);
    if ((alpha < 0) != (beta < 0) && alpha != 0 && beta != 0)
        return (std::pow(a, p + 1) + std::pow(b, p + 1)) / ((p + 1) * std::abs(beta - alpha));
    const double m = 0.5 * (a + b), d = b - a;
    if (m == 0) return 0.0;
    if (std::abs(d) < 1e-4 * m) {
        const double e = d / m;
        return std::pow(m, p) * (1 + p * (p - 1) * e * e / 24);
    }
    return (std::pow(b, p + 1) - std::pow(a, p + 1)) / ((p + 1) * d);
}

// Exact moments of a polygon containing the origin, by fan triangles.
std::vector<double> polygon_moments(const std::vector<Vec>& verts, double p, const SphereGrid& grid) {
    std::vector<double> out(grid.size(), 0.0);
    const std::size_t m = verts.size();
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const Vec xi = grid.node(j);
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const Vec& a = verts[k];
            const Vec& b = verts[(k + 1) % m];
            const double det = std::abs(a(0) * b(1) - a(1) * b(0));
            s += det * segment_power_mean(a.dot(xi), b.dot(xi), p) / (p + 2);
        }
        out[j] = s;
    }
    return out;
}

// (n+p)^{-1} int r^{n+p}(u) |<u, xi>|^p du in the plane, split where <u, xi> = 0.
std::vector<double> smooth_planar_moments(const ConvexBody& K, double p, const SphereGrid& grid) {
    std::vector<double> out(grid.size());
    const auto& rule = quad::gauss_legendre(32);
    constexpr int panels = 4;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const Vec xi = grid.node(j);
        const double psi = angle_of(xi(0), xi(1));
        double s = 0.0;
        for (int half = 0; half < 2; ++half) {
            const double a = psi - kPi / 2 + half * kPi;
            const double width = kPi / panels;
            for (int k = 0; k < panels; ++k) {
                const double mid = a + (k + 0.5) * width;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    const double th = mid + 0.5 * width * rule.nodes[i];
                    const Vec u = vec2(std::cos(th), std::sin(th));
                    s += 0.5 * width * rule.weights[i] * std::pow(K.radial(u), 2 + p) * abs_pow(u.dot(xi), p);
                }
            }
        }
        out[j] = s / (2 + p);
    }
    return out;
}

std::vector<double> grid_radial_moments(const ConvexBody& K, double p, const SphereGrid& grid) {
    const SphereGrid& sph = *SphereGrid::standard(K.dim());
    const int n = K.dim();
    kernels::PointSet pts;
    pts.n = n;
    for (std::size_t i = 0; i < sph.size(); ++i) {
        const Vec u = sph.node(i);
        const double w = sph.weight(i) * std::pow(K.radial(u), n + p) / (n + p);
        if (n == 2) pts.push(u(0), u(1), w);
        else pts.push(u(0), u(1), u(2), w);
    }
    std::vector<double> out(grid.size());
    kernels::abs_moments(pts, grid.points(), p, out);
    return out;
}

MomentBody finish(std::vector<double> hp, double p, MomentSource src, GridPtr grid, double scale = 1.0) {
    double mass = 0.0;
    for (double v : hp) mass = std::max(mass, v);
    if (!(mass > 0)) fail(ErrorKind::InvalidArgument, "moment source has zero mass");
    std::vector<double> h(hp.size());
    for (std::size_t i = 0; i < hp.size(); ++i) {
        h[i] = scale * std::pow(hp[i], 1 / p);
        if (!(h[i] >= kDegenerate)) fail(ErrorKind::DegenerateSource, "moment body has a vanishing support value");
    }
    return {ConvexBody::sampled(std::move(grid), std::move(h)), src, p};
}

}  // namespace

std::vector<double> body_moments(const ConvexBody& K, double p, const SphereGrid& grid) {
    check_p(p);
    if (grid.dim() != K.dim()) fail(ErrorKind::InvalidArgument, "sphere grid dimension mismatch");
    if (K.dim() == 2) {
        if (const auto* P = std::get_if<Polytope>(&K.rep())) return polygon_moments(P->vertices, p, grid);
        if (const auto* S = std::get_if<SupportSampled>(&K.rep())) return polygon_moments(S->polygon->vertices, p, grid);
        return smooth_planar_moments(K, p, grid);
    }
    return grid_radial_moments(K, p, grid);
}

double radial_factor(const Profile& G, int n, double p, double R) {
    check_p(p);
    if (!(R > 0)) fail(ErrorKind::InvalidArgument, "truncation radius must be positive");
    const double E = std::min(R, G.support_end);
    auto integrand = [&](double t) { return std::pow(t, n + p - 1) * G.value(t); };
    if (!std::isfinite(E)) {
        const double tail = radial_tail_fraction(G, n, p, 1e4);
        if (!(tail <= 1e-3)) fail(ErrorKind::InvalidArgument, "radial profile has a divergent tail");
    }
    const double I = quad::radial(integrand, G.breaks, E);
    if (!(I > 0) || !std::isfinite(I)) fail(ErrorKind::InvalidArgument, "radial profile has no positive finite mass");
    return std::pow((n + p) * I, 1 / p);
}

double radial_tail_fraction(const Profile& G, int n, double p, double R) {
    if (R >= G.support_end) return 0.0;
    auto integrand = [&](double t) { return std::pow(t, n + p - 1) * std::abs(G.value(t)); };
    const double head = quad::radial(integrand, G.breaks, R);
    // local power-law decay of the integrand decides convergence
    const double f1 = integrand(R), f2 = integrand(2 * R);
    if (f1 == 0) return 0.0;
    if (f2 == 0) return 0.0;
    const double kappa = -std::log(f2 / f1) / std::log(2.0);
    double tail;
    if (kappa > 4) {
        tail = quad::to_infinity(integrand, R);
    } else if (kappa > 1) {
        tail = R * f1 / (kappa - 1);
    } else {
        return kInf;
    }
    return tail / (head + tail);
}

namespace {

std::vector<double> grid_field_moments(const GridField& gf, double p, const kernels::PointSet& dirs) {
    kernels::PointSet pts;
    pts.n = gf.n;
    const double cell = gf.cell_volume();
    for (std::size_t i = 0; i < gf.size(); ++i) {
        if (gf.values[i] == 0) continue;
        const Vec x = gf.point(i);
        if (gf.n == 2) pts.push(x(0), x(1), gf.values[i] * cell);
        else pts.push(x(0), x(1), x(2), gf.values[i] * cell);
    }
    if (pts.size() == 0) fail(ErrorKind::InvalidArgument, "moment source has zero mass");
    std::vector<double> out(dirs.size());
    kernels::abs_moments(pts, dirs, p, out);
    return out;
}

}  // namespace

std::vector<double> field_moments(const Field& g, double p, const SphereGrid& grid) {
    check_p(p);
    if (grid.dim() != g.dim()) fail(ErrorKind::InvalidArgument, "sphere grid dimension mismatch");
    require_nonnegative(g);
    if (g.is_grid()) return grid_field_moments(g.as_grid(), p, grid.points());
    const RadialField& rf = g.as_radial();
    const double factor = std::pow(radial_factor(rf.profile, rf.gauge.dim(), p, rf.R), p);
    auto out = body_moments(rf.gauge, p, grid);
    for (double& v : out) v *= factor;
    return out;
}

std::vector<double> field_moments(const Field& g, double p, const std::vector<Vec>& dirs) {
    check_p(p);
    if (!g.is_grid()) fail(ErrorKind::Unsupported, "direction lists are supported for grid fields");
    require_nonnegative(g);
    kernels::PointSet d;
    d.n = g.dim();
    for (const Vec& v : dirs) {
        if (v.size() != d.n) fail(ErrorKind::InvalidArgument, "direction has wrong dimension");
        if (d.n == 2) d.push(v(0), v(1), 1.0);
        else d.push(v(0), v(1), v(2), 1.0);
    }
    return grid_field_moments(g.as_grid(), p, d);
}

MomentBody moment_body(const ConvexBody& K, double p, GridPtr grid) {
    if (!grid) grid = SphereGrid::standard(K.dim());
    return finish(body_moments(K, p, *grid), p, MomentSource::Body, grid);
}

MomentBody moment_body(const CompactDomain& M, double p) {
    return finish(domain_moments(M, p, M.grid()), p, MomentSource::Domain, M.grid_ptr());
}

MomentBody moment_body(const Field& g, double p, GridPtr grid) {
    if (!grid) grid = SphereGrid::standard(g.dim());
    return finish(field_moments(g, p, *grid), p, MomentSource::Field, grid);
}

MomentBody centroid_body(const ConvexBody& K, double p, GridPtr grid) {
    if (!grid) grid = SphereGrid::standard(K.dim());
    const double scale = std::pow(K.volume() * c_np(K.dim(), p), -1 / p);
    return finish(body_moments(K, p, *grid), p, MomentSource::Body, grid, scale);
}

MomentBody centroid_body(const CompactDomain& M, double p) {
    check_p(p);
    const double scale = std::pow(domain_volume(M) * c_np(M.dim(), p), -1 / p);
    return finish(domain_moments(M, p, M.grid()), p, MomentSource::Domain, M.grid_ptr(), scale);
}

}  // namespace lpc
