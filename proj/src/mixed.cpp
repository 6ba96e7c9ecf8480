#include "lpc/mixed.hpp"

#include "lpc/params.hpp"
#include "lpc/quadrature.hpp"

#include <Eigen/LU>
#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>

namespace lpc {

const char* to_string(MixedPath p) noexcept {
    switch (p) {
        case MixedPath::Atomic: return "atomic";
        case MixedPath::Curvature: return "curvature";
        case MixedPath::LinearImage: return "linear-image";
        case MixedPath::FiniteDifference: return "finite-difference";
    }
    return "?";
}

namespace {

void check_r(double r) {
    if (!(r >= 1 && std::isfinite(r))) fail(ErrorKind::InvalidArgument, "r must be >= 1");
}

// Polygon edges of a planar body: (outer unit normal, length, h_K(normal)).
struct Edge {
    Vec normal;
    double length;
    double h;
};

std::vector<Edge> planar_edges(const ConvexBody& K) {
    std::vector<Edge> out;
    if (const auto* P = std::get_if<Polytope>(&K.rep())) {
        for (const Facet& f : P->facets) out.push_back({f.normal, f.area, f.offset});
        return out;
    }
    const auto& S = std::get<SupportSampled>(K.rep());
    const CircumPolygon& poly = *S.polygon;
    const std::size_t m = poly.vertices.size();
    for (std::size_t e = 0; e < m; ++e) {
        const double len = (poly.vertices[(e + 1) % m] - poly.vertices[e]).norm();
        if (len == 0) continue;
        const std::size_t node = poly.facet_node[e];
        out.push_back({S.grid->node(node), len, S.h[node]});
    }
    return out;
}

// (|det A| / n) int_S h_L(A^{-T} v)^r dv for K = A B. In the plane the
// integral is split where A^{-T} v crosses a facet normal of L.
double linear_image_mixed(const Ellipsoid& E, const ConvexBody& L, double r) {
    const int n = L.dim();
    const Mat AinvT = E.Ainv.transpose();
    auto integrand = [&](const Vec& v) { return std::pow(L.support(AinvT * v), r); };
    if (n == 3) {
        const SphereGrid& grid = *SphereGrid::standard(3);
        double s = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) s += grid.weight(i) * integrand(grid.node(i));
        return std::abs(E.det) * s / n;
    }
    std::vector<double> cuts{0.0, 2 * kPi};
    if (L.is_polytope() || L.is_sampled())
        for (const Edge& e : planar_edges(L)) {
            const Vec w = E.A.transpose() * e.normal;
            cuts.push_back(angle_of(w(0), w(1)));
        }
    std::sort(cuts.begin(), cuts.end());
    const auto& rule = quad::gauss_legendre(16);
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double a = cuts[k], b = cuts[k + 1];
        if (!(b > a)) continue;
        const int panels = static_cast<int>(std::ceil((b - a) / (kPi / 32)));
        const double width = (b - a) / panels;
        for (int q = 0; q < panels; ++q) {
            const double mid = a + (q + 0.5) * width;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double th = mid + 0.5 * width * rule.nodes[i];
                s += 0.5 * width * rule.weights[i] * integrand(vec2(std::cos(th), std::sin(th)));
            }
        }
    }
    return std::abs(E.det) * s / n;
}

// (1/2) int h_L^r h_K^{1-r} (h_K + h_K'') dtheta with spectral h_K''.
double curvature_mixed(const ConvexBody& K, const ConvexBody& L, double r) {
    constexpr int M = 4096;
    std::vector<double> h(M), hl(M);
    for (int j = 0; j < M; ++j) {
        const double th = 2 * kPi * j / M;
        const Vec u = vec2(std::cos(th), std::sin(th));
        h[j] = K.support(u);
        hl[j] = L.support(u);
    }
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.fwd(spec, h);
    for (int k = 0; k < M; ++k) {
        const double freq = k <= M / 2 ? k : k - M;
        spec[k] *= -freq * freq;
    }
    std::vector<double> d2;
    fft.inv(d2, spec);
    double s = 0.0;
    for (int j = 0; j < M; ++j) s += std::pow(hl[j], r) * std::pow(h[j], 1 - r) * (h[j] + d2[j]);
    return 0.5 * s * 2 * kPi / M;
}

GridPtr fd_grid_for(const ConvexBody& K, const ConvexBody& L) {
    if (const auto* S = std::get_if<SupportSampled>(&K.rep())) return S->grid;
    if (const auto* S = std::get_if<SupportSampled>(&L.rep())) return S->grid;
    return K.dim() == 2 ? SphereGrid::circle(32768) : SphereGrid::standard(3);
}

ConvexBody negated(const ConvexBody& K) { return linear_image(K, -Mat::Identity(K.dim(), K.dim())); }

// int over the ranges where P' < 0 and P' > 0 of |P'|^r t^{n-1} dt.
std::pair<double, double> profile_gradient_integrals(const Profile& P, int n, double r, double E) {
    auto part = [&](int sign) {
        return quad::radial(
            [&](double t) {
                const double d = P.derivative(t);
                return (sign < 0 ? d < 0 : d > 0) ? std::pow(std::abs(d), r) * std::pow(t, n - 1) : 0.0;
            },
            P.breaks, E);
    };
    const double down = part(-1);
    const double up = P.monotone ? 0.0 : part(+1);
    return {down, up};
}

// Radii where |P| crosses t, with the sign of P' there.
std::vector<std::pair<double, double>> level_radii(const Profile& P, double t, double E) {
    std::vector<std::pair<double, double>> out;
    auto g = [&](double s) { return std::abs(P.value(s)) - t; };
    auto refine = [&](double lo, double hi) {
        const bool left = g(lo) >= 0;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            ((g(mid) >= 0) == left ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    double hi = E;
    if (!std::isfinite(hi)) {
        hi = 1.0;
        while (g(hi) >= 0) {
            hi *= 2;
            if (hi > 1e12) fail(ErrorKind::NumericFailure, "level set radius does not stay bounded");
        }
    }
    constexpr int samples = 4096;
    double prev = 0.0;
    bool prev_in = g(0.0) >= 0;
    for (int i = 1; i <= samples; ++i) {
        const double s = hi * i / samples;
        const bool in = g(s) >= 0;
        if (in != prev_in) {
            const double root = refine(prev, s);
            out.push_back({root, P.derivative(root)});
        }
        prev = s;
        prev_in = in;
    }
    return out;
}

std::vector<double> gradient_moments(const GridField& g, double p, const kernels::PointSet& dirs) {
    kernels::PointSet pts;
    pts.n = g.n;
    const double cell = g.cell_volume();
    for (const Vec& d : grid_gradients(g)) {
        if (d.squaredNorm() == 0) continue;
        if (g.n == 2) pts.push(d(0), d(1), cell);
        else pts.push(d(0), d(1), d(2), cell);
    }
    if (pts.size() == 0) fail(ErrorKind::DegenerateField, "all gradients vanish");
    std::vector<double> out(dirs.size());
    kernels::abs_moments(pts, dirs, p, out);
    return out;
}

}  // namespace

std::vector<SurfaceAtom> surface_atoms(const ConvexBody& K, double r) {
    check_r(r);
    std::vector<SurfaceAtom> atoms;
    if (const auto* P = std::get_if<Polytope>(&K.rep())) {
        for (const Facet& f : P->facets) atoms.push_back({f.normal, f.area * std::pow(f.offset, 1 - r)});
        return atoms;
    }
    if (K.is_sampled() && K.dim() == 2) {
        for (const Edge& e : planar_edges(K)) atoms.push_back({e.normal, e.length * std::pow(e.h, 1 - r)});
        return atoms;
    }
    fail(ErrorKind::Unsupported, "surface atoms need a polytope or a sampled planar body");
}

double mixed_volume_fd(const ConvexBody& K, const ConvexBody& L, double r, GridPtr grid) {
    check_r(r);
    if (K.dim() != L.dim()) fail(ErrorKind::InvalidArgument, "bodies live in different dimensions");
    if (!grid) grid = fd_grid_for(K, L);
    const int n = K.dim();
    const double v0 = lr_combination(K, L, 0.0, r, grid).volume();
    auto quotient = [&](double eps) { return (lr_combination(K, L, eps, r, grid).volume() - v0) / eps; };
    const double d1 = quotient(1e-3), d2 = quotient(5e-4);
    return r / n * (2 * d2 - d1);
}

MixedVolumeReport mixed_volume_report(const ConvexBody& K, const ConvexBody& L, double r,
                                      const MixedVolumeOptions& opt) {
    check_r(r);
    if (K.dim() != L.dim()) fail(ErrorKind::InvalidArgument, "bodies live in different dimensions");
    const int n = K.dim();
    MixedVolumeReport rep;
    if (K.is_polytope() || (K.is_sampled() && n == 2)) {
        double s = 0.0;
        for (const SurfaceAtom& a : surface_atoms(K, r)) s += std::pow(L.support(a.normal), r) * a.weight;
        rep.value = s / n;
        rep.path = MixedPath::Atomic;
    } else if (K.is_ellipsoid() && n == 2 && L.is_ellipsoid()) {
        rep.value = curvature_mixed(K, L, r);
        rep.path = MixedPath::Curvature;
    } else if (K.is_ellipsoid()) {
        rep.value = linear_image_mixed(std::get<Ellipsoid>(K.rep()), L, r);
        rep.path = MixedPath::LinearImage;
    } else {
        rep.value = mixed_volume_fd(K, L, r, opt.fd_grid);
        rep.path = MixedPath::FiniteDifference;
        return rep;
    }
    if (opt.cross_check) {
        rep.fallback = mixed_volume_fd(K, L, r, opt.fd_grid);
        rep.rel_diff = std::abs(rep.fallback / rep.value - 1);
        rep.cross_checked = true;
        if (!(rep.rel_diff <= (n == 2 ? opt.cross_tol : opt.cross_tol_3d)))
            fail(ErrorKind::NumericFailure, std::string("mixed volume paths disagree: ") + to_string(rep.path) + " " +
                                                std::to_string(rep.value) + " vs finite-difference " +
                                                std::to_string(rep.fallback));
    }
    return rep;
}

double mixed_volume_r(const ConvexBody& K, const ConvexBody& L, double r, const MixedVolumeOptions& opt) {
    return mixed_volume_report(K, L, r, opt).value;
}

double functional_mixed_volume(const Field& f, const ConvexBody& K, double r) {
    check_r(r);
    const int n = f.dim();
    if (K.dim() != n) fail(ErrorKind::InvalidArgument, "body and field live in different dimensions");
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        const auto grads = grid_gradients(g);
        double s = 0.0;
        for (const Vec& d : grads)
            if (d.squaredNorm() > 0) s += std::pow(K.support(-d), r);
        return s * g.cell_volume() / n;
    }
    const RadialField& rf = f.as_radial();
    const auto [down, up] = profile_gradient_integrals(rf.profile, n, r, rf.extent());
    MixedVolumeOptions opt;
    opt.cross_check = false;
    double v = 0.0;
    if (down > 0) v += down * mixed_volume_r(rf.gauge, K, r, opt);
    if (up > 0) v += up * mixed_volume_r(rf.gauge, negated(K), r, opt);
    return v;
}

LevelMixedResult level_mixed_volume(const Field& f, double t, const ConvexBody& Q, double r) {
    check_r(r);
    if (!(t > 0)) fail(ErrorKind::InvalidArgument, "level threshold must be positive");
    const int n = f.dim();
    if (Q.dim() != n) fail(ErrorKind::InvalidArgument, "body and field live in different dimensions");
    LevelMixedResult out;
    if (t > f.max_abs()) return out;
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        if (n != 2) fail(ErrorKind::Unsupported, "level-set integrals are implemented for planar grid fields");
        double s = 0.0;
        for (const Segment& seg : contour(g, t)) {
            const Vec grad = gradient_eval(f, 0.5 * (seg.a + seg.b)).grad;
            const double len = grad.norm();
            if (!(len > 1e-12)) {
                out.irregular = true;
                continue;
            }
            s += std::pow(Q.support(-grad / len), r) * std::pow(len, r - 1) * (seg.b - seg.a).norm();
        }
        out.value = s / n;
        return out;
    }
    const RadialField& rf = f.as_radial();
    MixedVolumeOptions opt;
    opt.cross_check = false;
    for (const auto& [s, dP] : level_radii(rf.profile, t, rf.extent())) {
        if (dP == 0) {
            out.irregular = true;
            continue;
        }
        const double mv = mixed_volume_r(rf.gauge, dP < 0 ? Q : negated(Q), r, opt);
        out.value += std::pow(s, n - 1) * std::pow(std::abs(dP), r - 1) * mv;
    }
    return out;
}

double dual_mixed_volume(const Field& g, const ConvexBody& L, double p) {
    if (!(p >= 1)) fail(ErrorKind::InvalidArgument, "p must be >= 1");
    require_nonnegative(g);
    const int n = g.dim();
    if (L.dim() != n) fail(ErrorKind::InvalidArgument, "body and field live in different dimensions");
    if (g.is_grid()) {
        const GridField& gf = g.as_grid();
        double s = 0.0;
        for (std::size_t i = 0; i < gf.size(); ++i)
            if (gf.values[i] != 0) s += gf.values[i] * std::pow(L.gauge(gf.point(i)), p);
        return s * gf.cell_volume();
    }
    const RadialField& rf = g.as_radial();
    const Profile& G = rf.profile;
    const double radial = quad::radial([&](double t) { return G.value(t) * std::pow(t, n + p - 1); }, G.breaks, rf.extent());
    const GridPtr grid = n == 2 ? SphereGrid::circle(8192) : SphereGrid::standard(3);
    double sph = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec u = grid->node(i);
        sph += grid->weight(i) * std::pow(rf.gauge.radial(u), n + p) * std::pow(L.gauge(u), p);
    }
    return radial * sph;
}

std::vector<double> polar_projection_moments(const Field& f, double p, const SphereGrid& grid) {
    if (!(p >= 1)) fail(ErrorKind::InvalidArgument, "p must be >= 1");
    const int n = f.dim();
    if (grid.dim() != n) fail(ErrorKind::InvalidArgument, "sphere grid dimension mismatch");
    std::vector<double> out(grid.size(), 0.0);
    if (!f.is_grid()) {
        const RadialField& rf = f.as_radial();
        const ConvexBody& L = rf.gauge;
        const auto [down, up] = profile_gradient_integrals(rf.profile, n, p, rf.extent());
        const double I = down + up;
        if (const auto* E = std::get_if<Ellipsoid>(&L.rep())) {
            // int_S |<v, e_1>|^p dv
            const double sphere_moment =
                2 * std::pow(kPi, (n - 1) / 2.0) * std::exp(log_gamma((p + 1) / 2) - log_gamma((n + p) / 2));
            for (std::size_t j = 0; j < grid.size(); ++j)
                out[j] = I * std::abs(E->det) * std::pow((E->Ainv * grid.node(j)).norm(), p) * sphere_moment;
            return out;
        }
        if (L.is_polytope() || (L.is_sampled() && n == 2)) {
            const auto atoms = surface_atoms(L, p);
            for (std::size_t j = 0; j < grid.size(); ++j) {
                const Vec xi = grid.node(j);
                double s = 0.0;
                for (const SurfaceAtom& a : atoms) s += abs_pow(a.normal.dot(xi), p) * a.weight;
                out[j] = I * s;
            }
            return out;
        }
        return polar_projection_moments(Field::grid(rasterize(f, 97)), p, grid);
    }
    return gradient_moments(f.as_grid(), p, grid.points());
}

std::vector<double> polar_projection_moments(const Field& f, double p, const std::vector<Vec>& dirs) {
    if (!(p >= 1)) fail(ErrorKind::InvalidArgument, "p must be >= 1");
    if (!f.is_grid()) fail(ErrorKind::Unsupported, "direction lists are supported for grid fields");
    kernels::PointSet d;
    d.n = f.dim();
    for (const Vec& v : dirs) {
        if (v.size() != d.n) fail(ErrorKind::InvalidArgument, "direction has wrong dimension");
        if (d.n == 2) d.push(v(0), v(1), 1.0);
        else d.push(v(0), v(1), v(2), 1.0);
    }
    return gradient_moments(f.as_grid(), p, d);
}

ConvexBody polar_projection_body_of_function(const Field& f, double p, GridPtr grid) {
    if (!grid) grid = SphereGrid::standard(f.dim());
    const auto hp = polar_projection_moments(f, p, *grid);
    std::vector<double> h(hp.size());
    for (std::size_t i = 0; i < hp.size(); ++i) {
        h[i] = std::pow(hp[i], 1 / p);
        if (!(h[i] >= 1e-12)) fail(ErrorKind::DegenerateField, "gradients concentrate on a hyperplane");
    }
    return ConvexBody::sampled(grid, std::move(h));
}

double polygon_area(const std::vector<Vec>& v) {
    double a = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Vec& p = v[k];
        const Vec& q = v[(k + 1) % v.size()];
        a += p(0) * q(1) - p(1) * q(0);
    }
    return a / 2;
}

double polygon_mixed_volume_1(const std::vector<Vec>& v, const ConvexBody& K) {
    if (K.dim() != 2) fail(ErrorKind::InvalidArgument, "planar polygons need a planar body");
    if (v.size() < 3) fail(ErrorKind::InvalidArgument, "polygon needs at least 3 vertices");
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Vec e = v[(k + 1) % v.size()] - v[k];
        const double len = e.norm();
        if (len == 0) continue;
        s += len * K.support(vec2(e(1), -e(0)) / len);
    }
    return s / 2;
}

}  // namespace lpc
