#include "lpc/instances.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace lpc {

const char* to_string(GeneratorKind k) noexcept {
    switch (k) {
        case GeneratorKind::RandomPolygon: return "random-polygon";
        case GeneratorKind::RandomEllipse: return "random-ellipse";
        case GeneratorKind::RandomDomain: return "random-domain";
        case GeneratorKind::RandomGridField: return "random-grid-field";
        case GeneratorKind::RadialProfileField: return "radial-profile-field";
        case GeneratorKind::ExtremalPair: return "extremal-pair";
    }
    return "?";
}

GeneratorKind generator_from_string(const std::string& s) {
    for (auto k : {GeneratorKind::RandomPolygon, GeneratorKind::RandomEllipse, GeneratorKind::RandomDomain,
                   GeneratorKind::RandomGridField, GeneratorKind::RadialProfileField, GeneratorKind::ExtremalPair})
        if (s == to_string(k)) return k;
    fail(ErrorKind::InvalidArgument, "unknown generator: " + s);
}

namespace {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

Vec random_unit(Rng& rng, int n) {
    std::normal_distribution<double> N(0, 1);
    Vec v(n);
    do {
        for (int i = 0; i < n; ++i) v(i) = N(rng);
    } while (v.norm() < 1e-3);
    return v / v.norm();
}

// Random polynomial of degree <= 3 in the coordinates of u.
struct SmoothSphereFunction {
    int n;
    std::vector<std::array<int, 3>> powers;
    std::vector<double> coef;

    SmoothSphereFunction(Rng& rng, int dim, double amplitude) : n(dim) {
        std::normal_distribution<double> N(0, 1);
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                for (int c = 0; a + b + c <= 3; ++c) {
                    if (a + b + c == 0 || (n == 2 && c > 0)) continue;
                    powers.push_back({a, b, c});
                    coef.push_back(amplitude * N(rng) / (a + b + c));
                }
    }
    double operator()(const Vec& u) const {
        double s = 0.0;
        for (std::size_t k = 0; k < powers.size(); ++k) {
            double m = coef[k] * std::pow(u(0), powers[k][0]) * std::pow(u(1), powers[k][1]);
            if (n == 3) m *= std::pow(u(2), powers[k][2]);
            s += m;
        }
        return s;
    }
};

std::vector<Vec> recentre(std::vector<Vec> pts, const Vec& c) {
    for (Vec& v : pts) v -= c;
    return pts;
}

}  // namespace

Mat random_rotation(Rng& rng, int n) {
    std::normal_distribution<double> N(0, 1);
    Mat G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = N(rng);
    Eigen::HouseholderQR<Mat> qr(G);
    Mat Q = qr.householderQ();
    if (Q.determinant() < 0) Q.col(0) *= -1;
    return Q;
}

Mat random_sl(Rng& rng, int n) {
    Mat D = Mat::Zero(n, n);
    double logsum = 0.0;
    for (int i = 0; i < n; ++i) {
        D(i, i) = std::exp(uniform(rng, -0.4, 0.4));
        logsum += std::log(D(i, i));
    }
    D *= std::exp(-logsum / n);
    return random_rotation(rng, n) * D * random_rotation(rng, n);
}

ConvexBody random_polygon(Rng& rng) {
    const int m = std::uniform_int_distribution<int>(5, 12)(rng);
    const double a = uniform(rng, 0.6, 1.6), b = uniform(rng, 0.6, 1.6);
    const Mat R = random_rotation(rng, 2);
    std::vector<Vec> pts;
    for (int i = 0; i < m; ++i) {
        const double th = 2 * kPi * (i + uniform(rng, 0.0, 0.8)) / m;
        const double rad = uniform(rng, 0.8, 1.2);
        pts.push_back(R * vec2(a * rad * std::cos(th), b * rad * std::sin(th)));
    }
    // centroid of the hull
    Vec mean = Vec::Zero(2);
    for (const Vec& v : pts) mean += v / m;
    const ConvexBody hull = ConvexBody::polytope(recentre(pts, mean));
    const auto& verts = std::get<Polytope>(hull.rep()).vertices;
    Vec c = Vec::Zero(2);
    double area = 0.0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const Vec& p = verts[k];
        const Vec& q = verts[(k + 1) % verts.size()];
        const double cr = p(0) * q(1) - p(1) * q(0);
        area += cr / 2;
        c += cr * (p + q) / 6;
    }
    return ConvexBody::polytope(recentre(verts, c / area));
}

ConvexBody random_polytope3(Rng& rng) {
    const int m = std::uniform_int_distribution<int>(12, 24)(rng);
    const Mat A = random_rotation(rng, 3) *
                  vec3(uniform(rng, 0.6, 1.6), uniform(rng, 0.6, 1.6), uniform(rng, 0.6, 1.6)).asDiagonal();
    std::vector<Vec> pts;
    Vec mean = Vec::Zero(3);
    for (int i = 0; i < m; ++i) {
        pts.push_back(A * random_unit(rng, 3) * uniform(rng, 0.8, 1.2));
        mean += pts.back() / m;
    }
    return ConvexBody::polytope(recentre(pts, mean));
}

ConvexBody random_ellipsoid(Rng& rng, int n) {
    Mat D = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) D(i, i) = uniform(rng, 0.5, 2.0);
    return ConvexBody::ellipsoid(random_rotation(rng, n) * D);
}

CompactDomain random_domain(Rng& rng, GridPtr grid) {
    const int n = grid->dim();
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    const bool from_origin = std::bernoulli_distribution(0.5)(rng);
    // radii c_0 < c_1 < ... built from smooth positive thicknesses
    std::vector<double> base;
    std::vector<SmoothSphereFunction> shape;
    for (int j = 0; j < 2 * k; ++j) {
        base.push_back(uniform(rng, 0.15, 0.5));
        shape.emplace_back(rng, n, 0.4);
    }
    std::vector<std::vector<Interval>> rays(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec u = grid->node(i);
        std::vector<double> c;
        double acc = 0.0;
        for (int j = 0; j < 2 * k; ++j) {
            acc += base[j] * std::exp(shape[j](u));
            c.push_back(acc);
        }
        auto& ray = rays[i];
        for (int j = 0; j < k; ++j) {
            const double a = (j == 0 && from_origin) ? 0.0 : c[2 * j];
            ray.push_back({a, c[2 * j + 1]});
        }
    }
    return CompactDomain(grid, std::move(rays));
}

std::vector<Vec> random_star_polygon(Rng& rng) {
    const int m = std::uniform_int_distribution<int>(6, 20)(rng);
    std::vector<double> th(m);
    for (int k = 0; k < m; ++k) th[k] = 2 * kPi * (k + uniform(rng, 0.0, 0.7)) / m;
    std::vector<Vec> v;
    for (int k = 0; k < m; ++k) {
        const double rad = uniform(rng, 0.3, 1.5);
        v.push_back(vec2(rad * std::cos(th[k]), rad * std::sin(th[k])));
    }
    return v;
}

double BumpMixture::value(const Vec& x) const {
    double v = 0.0;
    for (const Bump& b : bumps) {
        const Vec y = b.A.partialPivLu().solve(x - b.center);
        const double q = 1 - y.squaredNorm();
        if (q > 0) v += b.weight * std::pow(q, b.power);
    }
    return v;
}

BumpMixture BumpMixture::transformed(const Mat& T) const {
    BumpMixture out = *this;
    for (Bump& b : out.bumps) {
        b.center = T * b.center;
        b.A = T * b.A;
    }
    return out;
}

Field BumpMixture::sample(int nodes_per_axis) const {
    if (bumps.empty()) fail(ErrorKind::InvalidArgument, "empty bump mixture");
    Vec lo = Vec::Constant(n, kInf), hi = Vec::Constant(n, -kInf);
    for (const Bump& b : bumps)
        for (int a = 0; a < n; ++a) {
            const double half = b.A.row(a).norm();
            lo(a) = std::min(lo(a), b.center(a) - half);
            hi(a) = std::max(hi(a), b.center(a) + half);
        }
    const Vec mid = 0.5 * (lo + hi);
    const Vec half = 0.55 * (hi - lo);
    const double h = 2 * half.maxCoeff() / (nodes_per_axis - 1);
    GridField g;
    g.n = n;
    g.h = h;
    g.lo = Vec(n);
    std::size_t total = 1;
    for (int a = 0; a < n; ++a) {
        g.shape[a] = static_cast<int>(std::ceil(2 * half(a) / h)) + 1;
        g.lo(a) = mid(a) - 0.5 * (g.shape[a] - 1) * h;
        total *= static_cast<std::size_t>(g.shape[a]);
    }
    if (n == 2) g.shape[2] = 1;
    std::vector<Mat> inv;
    for (const Bump& b : bumps) inv.push_back(b.A.inverse());
    g.values.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        const Vec x = g.point(i);
        double v = 0.0;
        for (std::size_t k = 0; k < bumps.size(); ++k) {
            const double q = 1 - (inv[k] * (x - bumps[k].center)).squaredNorm();
            if (q > 0) v += bumps[k].weight * std::pow(q, bumps[k].power);
        }
        g.values[i] = v;
    }
    return Field::grid(std::move(g));
}

BumpMixture random_bumps(Rng& rng, int n) {
    BumpMixture m;
    m.n = n;
    const int count = std::uniform_int_distribution<int>(2, 4)(rng);
    for (int k = 0; k < count; ++k) {
        Bump b;
        b.center = random_unit(rng, n) * uniform(rng, 0.0, 0.5);
        Mat D = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i) D(i, i) = uniform(rng, 0.4, 1.0);
        b.A = random_rotation(rng, n) * D;
        b.weight = uniform(rng, 0.5, 1.5);
        m.bumps.push_back(b);
    }
    return m;
}

Field random_radial_field(Rng& rng, int n) {
    const double k = std::uniform_int_distribution<int>(2, 4)(rng);
    Profile P = rescaled(make_profile("bump", {{"k", k}}), uniform(rng, 0.5, 2.0), 1.0);
    ConvexBody gauge = (n == 2 && std::bernoulli_distribution(0.5)(rng)) ? random_polygon(rng)
                                                                         : random_ellipsoid(rng, n);
    return Field::radial(std::move(P), std::move(gauge), 1.0);
}

}  // namespace lpc
