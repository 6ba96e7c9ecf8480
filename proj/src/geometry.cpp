#include "lpc/geometry.hpp"

#include "lpc/params.hpp"
#include "lpc/quadrature.hpp"

#include <Eigen/Geometry>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace lpc {

double angle_of(double x, double y) {
    double a = std::atan2(y, x);
    if (a < 0) a += 2 * kPi;
    if (a >= 2 * kPi) a -= 2 * kPi;
    return a;
}

// ---------------------------------------------------------------- SphereGrid

std::shared_ptr<const SphereGrid> SphereGrid::circle(int nodes) {
    if (nodes < 8) fail(ErrorKind::InvalidArgument, "circle grid needs at least 8 nodes");
    auto g = std::make_shared<SphereGrid>();
    g->n_ = 2;
    g->pts_.n = 2;
    const double w = 2 * kPi / nodes;
    for (int i = 0; i < nodes; ++i) {
        const double t = w * i;
        g->pts_.push(std::cos(t), std::sin(t), w);
    }
    return g;
}

std::shared_ptr<const SphereGrid> SphereGrid::sphere(int n_theta, int n_phi) {
    if (n_theta < 4 || n_phi < 8) fail(ErrorKind::InvalidArgument, "sphere grid too coarse");
    auto g = std::make_shared<SphereGrid>();
    g->n_ = 3;
    g->n_theta_ = n_theta;
    g->n_phi_ = n_phi;
    g->pts_.n = 3;
    const quad::GaussRule& rule = quad::gauss_legendre(n_theta);
    const double dphi = 2 * kPi / n_phi;
    for (int k = 0; k < n_theta; ++k) {
        const double c = rule.nodes[n_theta - 1 - k];
        const double s = std::sqrt(std::max(0.0, 1 - c * c));
        g->theta_.push_back(std::acos(c));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = dphi * j;
            g->pts_.push(s * std::cos(phi), s * std::sin(phi), c, rule.weights[n_theta - 1 - k] * dphi);
        }
    }
    return g;
}

std::shared_ptr<const SphereGrid> SphereGrid::standard(int n) {
    static std::mutex mutex;
    static std::map<int, GridPtr> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    GridPtr g;
    if (n == 2) g = circle(1024);
    else if (n == 3) g = sphere(64, 128);
    else fail(ErrorKind::Unsupported, "sphere grids exist for n = 2 and n = 3 only");
    cache.emplace(n, g);
    return g;
}

Vec SphereGrid::node(std::size_t i) const {
    return n_ == 2 ? vec2(pts_.x[i], pts_.y[i]) : vec3(pts_.x[i], pts_.y[i], pts_.z[i]);
}

double SphereGrid::total_weight() const { return std::accumulate(pts_.w.begin(), pts_.w.end(), 0.0); }

std::size_t SphereGrid::nearest(const Vec& u) const {
    if (n_ == 2) {
        const long N = static_cast<long>(size());
        const long i = std::lround(angle_of(u(0), u(1)) / (2 * kPi) * N);
        return static_cast<std::size_t>(((i % N) + N) % N);
    }
    const double th = std::acos(std::clamp(u(2) / u.norm(), -1.0, 1.0));
    auto it = std::lower_bound(theta_.begin(), theta_.end(), th);
    std::size_t ring;
    if (it == theta_.begin()) ring = 0;
    else if (it == theta_.end()) ring = theta_.size() - 1;
    else {
        const std::size_t hi = static_cast<std::size_t>(it - theta_.begin());
        ring = (th - theta_[hi - 1] < theta_[hi] - th) ? hi - 1 : hi;
    }
    const long j = std::lround(angle_of(u(0), u(1)) / (2 * kPi) * n_phi_) % n_phi_;
    return ring * n_phi_ + static_cast<std::size_t>(j);
}

SphereGrid::Stencil SphereGrid::stencil(const Vec& u) const {
    Stencil s;
    if (n_ == 2) {
        const std::size_t N = size();
        const double a = angle_of(u(0), u(1)) / (2 * kPi) * N;
        const double fl = std::floor(a);
        const double f = a - fl;
        const std::size_t i0 = static_cast<std::size_t>(fl) % N;
        s.index = {i0, (i0 + 1) % N, 0, 0};
        s.weight = {1 - f, f, 0, 0};
        s.count = 2;
        return s;
    }
    const double th = std::acos(std::clamp(u(2) / u.norm(), -1.0, 1.0));
    std::size_t r0, r1;
    double ft;
    if (th <= theta_.front()) {
        r0 = r1 = 0;
        ft = 0;
    } else if (th >= theta_.back()) {
        r0 = r1 = theta_.size() - 1;
        ft = 0;
    } else {
        const auto it = std::upper_bound(theta_.begin(), theta_.end(), th);
        r1 = static_cast<std::size_t>(it - theta_.begin());
        r0 = r1 - 1;
        ft = (th - theta_[r0]) / (theta_[r1] - theta_[r0]);
    }
    const double a = angle_of(u(0), u(1)) / (2 * kPi) * n_phi_;
    const double fl = std::floor(a);
    const double fp = a - fl;
    const std::size_t j0 = static_cast<std::size_t>(fl) % n_phi_, j1 = (j0 + 1) % n_phi_;
    s.index = {r0 * n_phi_ + j0, r0 * n_phi_ + j1, r1 * n_phi_ + j0, r1 * n_phi_ + j1};
    s.weight = {(1 - ft) * (1 - fp), (1 - ft) * fp, ft * (1 - fp), ft * fp};
    s.count = 4;
    return s;
}

double SphereGrid::interpolate(const std::vector<double>& values, const Vec& u) const {
    const Stencil s = stencil(u);
    double v = 0;
    for (int k = 0; k < s.count; ++k) v += s.weight[k] * values[s.index[k]];
    return v;
}

bool SphereGrid::same_layout(const SphereGrid& o) const {
    return n_ == o.n_ && size() == o.size() && n_theta_ == o.n_theta_ && n_phi_ == o.n_phi_;
}

// ---------------------------------------------------------------- builders

namespace {

constexpr double kOriginClearance = 1e-9;

double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

// Monotone chain; returns indices of hull vertices counter-clockwise.
// Points within `tol` (relative) of a hull edge are dropped.
std::vector<std::size_t> hull2(const std::vector<Vec>& pts, double tol = 0.0) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a](0) < pts[b](0) || (pts[a](0) == pts[b](0) && pts[a](1) < pts[b](1));
    });
    if (idx.size() < 3) return idx;
    auto turns_right = [tol](const Vec& o, const Vec& a, const Vec& b) {
        return cross2(o, a, b) <= tol * (a - o).norm() * (b - o).norm();
    };
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && turns_right(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]])) --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && turns_right(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]])) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

Polytope build_polygon(const std::vector<Vec>& points) {
    Polytope P;
    P.n = 2;
    const auto h = hull2(points);
    if (h.size() < 3) fail(ErrorKind::InvalidArgument, "polygon needs three non-collinear vertices");
    for (auto i : h) P.vertices.push_back(points[i]);
    const std::size_t m = P.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& a = P.vertices[i];
        const Vec& b = P.vertices[(i + 1) % m];
        const Vec e = b - a;
        Facet f;
        f.area = e.norm();
        f.normal = vec2(e(1), -e(0)) / f.area;
        f.offset = f.normal.dot(a);
        P.volume += 0.5 * f.area * f.offset;
        P.facets.push_back(f);
    }
    return P;
}

Polytope build_polytope3(const std::vector<Vec>& points) {
    Polytope P;
    P.n = 3;
    const std::size_t m = points.size();
    if (m < 4) fail(ErrorKind::InvalidArgument, "polytope needs at least four vertices");
    double scale = 0;
    for (const auto& v : points) scale = std::max(scale, v.norm());
    const double tol = 1e-10 * std::max(1.0, scale);
    std::vector<bool> extreme(m, false);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Eigen::Vector3d a = points[i], b = points[j], c = points[k];
                Eigen::Vector3d nrm = (b - a).cross(c - a);
                if (nrm.norm() < tol) continue;
                nrm.normalize();
                const double d = nrm.dot(a);
                bool below = true, above = true;
                for (const auto& v : points) {
                    const double s = nrm.dot(Eigen::Vector3d(v)) - d;
                    if (s > tol) below = false;
                    if (s < -tol) above = false;
                }
                if (!below && !above) continue;
                Vec normal = below ? Vec(nrm) : Vec(-nrm);
                const bool dup = std::any_of(P.facets.begin(), P.facets.end(),
                                             [&](const Facet& f) { return f.normal.dot(normal) > 1 - 1e-9; });
                if (dup) continue;
                Facet f;
                f.normal = normal;
                f.offset = normal.dot(a);
                std::vector<Eigen::Vector3d> fv;
                for (std::size_t t = 0; t < m; ++t)
                    if (std::abs(normal.dot(points[t]) - f.offset) <= tol) {
                        fv.push_back(points[t]);
                        extreme[t] = true;
                    }
                Eigen::Vector3d cen = Eigen::Vector3d::Zero();
                for (const auto& v : fv) cen += v;
                cen /= static_cast<double>(fv.size());
                Eigen::Vector3d e1 = (fv[0] - cen).normalized();
                Eigen::Vector3d e2 = Eigen::Vector3d(normal).cross(e1);
                std::sort(fv.begin(), fv.end(), [&](const auto& p, const auto& q) {
                    return std::atan2((p - cen).dot(e2), (p - cen).dot(e1)) <
                           std::atan2((q - cen).dot(e2), (q - cen).dot(e1));
                });
                Eigen::Vector3d acc = Eigen::Vector3d::Zero();
                for (std::size_t t = 0; t < fv.size(); ++t) acc += fv[t].cross(fv[(t + 1) % fv.size()]);
                f.area = 0.5 * std::abs(acc.dot(Eigen::Vector3d(normal)));
                P.volume += f.area * f.offset / 3.0;
                P.facets.push_back(f);
            }
    if (P.facets.size() < 4) fail(ErrorKind::InvalidArgument, "polytope is degenerate");
    for (std::size_t t = 0; t < m; ++t)
        if (extreme[t]) P.vertices.push_back(points[t]);
    return P;
}

}  // namespace

CircumPolygon circumscribed_polygon(const SphereGrid& grid, const std::vector<double>& h) {
    if (grid.dim() != 2) fail(ErrorKind::InvalidArgument, "circumscribed polygon is planar");
    std::vector<Vec> dual(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(h[i] > 0)) fail(ErrorKind::InvalidArgument, "support values must be positive");
        dual[i] = grid.node(i) / h[i];
    }
    std::vector<std::size_t> act = hull2(dual, 1e-12);
    // order active constraints by the angle of their normals
    std::sort(act.begin(), act.end());
    const std::size_t m = act.size();
    if (m < 3) fail(ErrorKind::NumericFailure, "support samples do not bound a polygon");
    CircumPolygon poly;
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t i = act[a], j = act[(a + 1) % m];
        Eigen::Matrix2d M;
        M << grid.node(i)(0), grid.node(i)(1), grid.node(j)(0), grid.node(j)(1);
        Eigen::Vector2d v = M.inverse() * Eigen::Vector2d(h[i], h[j]);
        poly.vertices.push_back(vec2(v(0), v(1)));
        poly.facet_node.push_back(j);
    }
    // rotate so vertex angles ascend from the smallest one
    std::vector<double> ang(m);
    for (std::size_t a = 0; a < m; ++a) ang[a] = angle_of(poly.vertices[a](0), poly.vertices[a](1));
    const std::size_t start = static_cast<std::size_t>(std::min_element(ang.begin(), ang.end()) - ang.begin());
    std::rotate(poly.vertices.begin(), poly.vertices.begin() + start, poly.vertices.end());
    std::rotate(poly.facet_node.begin(), poly.facet_node.begin() + start, poly.facet_node.end());
    std::rotate(ang.begin(), ang.begin() + start, ang.end());
    for (std::size_t a = 1; a < m; ++a) {
        if (ang[a] < ang[a - 1] - kPi) ang[a] += 2 * kPi;
        ang[a] = std::max(ang[a], ang[a - 1]);
    }
    poly.vertex_angle = ang;
    for (std::size_t a = 0; a < m; ++a) {
        const Vec& p = poly.vertices[a];
        const Vec& q = poly.vertices[(a + 1) % m];
        poly.area += 0.5 * (p(0) * q(1) - p(1) * q(0));
    }
    return poly;
}

namespace {

// index of the edge (vertex a -> a+1) hit by the ray at angle th
std::size_t polygon_edge(const CircumPolygon& poly, double th) {
    const auto& va = poly.vertex_angle;
    auto it = std::upper_bound(va.begin(), va.end(), th);
    if (it == va.begin()) return va.size() - 1;
    return static_cast<std::size_t>(it - va.begin()) - 1;
}

}  // namespace

// ---------------------------------------------------------------- ConvexBody

ConvexBody ConvexBody::polytope(const std::vector<Vec>& points) {
    if (points.empty()) fail(ErrorKind::InvalidArgument, "empty vertex list");
    const int n = static_cast<int>(points.front().size());
    for (const auto& v : points)
        if (v.size() != n) fail(ErrorKind::InvalidArgument, "mixed vertex dimensions");
    Polytope P;
    if (n == 2) P = build_polygon(points);
    else if (n == 3) P = build_polytope3(points);
    else fail(ErrorKind::Unsupported, "polytopes are supported for n = 2, 3");
    for (const auto& f : P.facets)
        if (f.offset < kOriginClearance) fail(ErrorKind::InvalidArgument, "origin is not interior to the polytope");
    return ConvexBody(n, std::move(P));
}

ConvexBody ConvexBody::ellipsoid(const Mat& A) {
    if (A.rows() != A.cols() || A.rows() < 2 || A.rows() > 3)
        fail(ErrorKind::InvalidArgument, "ellipsoid matrix must be 2x2 or 3x3");
    Ellipsoid E;
    E.A = A;
    E.det = A.determinant();
    if (!(std::abs(E.det) > 1e-14)) fail(ErrorKind::InvalidArgument, "ellipsoid matrix is singular");
    E.Ainv = A.inverse();
    return ConvexBody(static_cast<int>(A.rows()), std::move(E));
}

ConvexBody ConvexBody::sampled(GridPtr grid, std::vector<double> h) {
    if (!grid || h.size() != grid->size()) fail(ErrorKind::InvalidArgument, "support values do not match the grid");
    for (double v : h)
        if (!(v > 0) || !std::isfinite(v)) fail(ErrorKind::InvalidArgument, "support values must be positive");
    SupportSampled S;
    S.grid = grid;
    S.h = std::move(h);
    if (grid->dim() == 2) S.polygon = std::make_shared<CircumPolygon>(circumscribed_polygon(*grid, S.h));
    const int n = grid->dim();
    return ConvexBody(n, std::move(S));
}

ConvexBody ConvexBody::ball(int n, double radius) { return ellipsoid(Mat::Identity(n, n) * radius); }

ConvexBody ConvexBody::cube(int n, double half) {
    std::vector<Vec> v;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec p(n);
        for (int k = 0; k < n; ++k) p(k) = (mask >> k & 1) ? half : -half;
        v.push_back(p);
    }
    return polytope(v);
}

double ConvexBody::support(const Vec& xi) const {
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope>) {
                double best = -kInf;
                for (const auto& v : b.vertices) best = std::max(best, v.dot(xi));
                return best;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return (b.A.transpose() * xi).norm();
            } else {
                const double len = xi.norm();
                if (len == 0) return 0.0;
                return len * b.grid->interpolate(b.h, xi);
            }
        },
        rep_);
}

double ConvexBody::radial(const Vec& u_in) const {
    const Vec u = u_in.normalized();
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope>) {
                double best = kInf;
                for (const auto& f : b.facets) {
                    const double c = f.normal.dot(u);
                    if (c > 0) best = std::min(best, f.offset / c);
                }
                return best;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return 1.0 / (b.Ainv * u).norm();
            } else {
                if (b.grid->dim() == 2) {
                    const auto& poly = *b.polygon;
                    const std::size_t e = polygon_edge(poly, angle_of(u(0), u(1)));
                    const std::size_t i = poly.facet_node[e];
                    return b.h[i] / b.grid->node(i).dot(u);
                }
                double best = kInf;
                const auto& P = b.grid->points();
                for (std::size_t i = 0; i < b.grid->size(); ++i) {
                    const double c = P.x[i] * u(0) + P.y[i] * u(1) + P.z[i] * u(2);
                    if (c > 0) best = std::min(best, b.h[i] / c);
                }
                if (!std::isfinite(best)) fail(ErrorKind::NumericFailure, "grid too coarse for polar duality");
                return best;
            }
        },
        rep_);
}

double ConvexBody::gauge(const Vec& x) const {
    const double len = x.norm();
    if (len == 0) return 0.0;
    if (const auto* E = std::get_if<Ellipsoid>(&rep_)) return (E->Ainv * x).norm();
    if (const auto* P = std::get_if<Polytope>(&rep_)) {
        double best = 0;
        for (const auto& f : P->facets) best = std::max(best, f.normal.dot(x) / f.offset);
        return best;
    }
    return len / radial(x / len);
}

GaugeGradient ConvexBody::gauge_gradient(const Vec& x) const {
    GaugeGradient g;
    const double len = x.norm();
    if (len == 0) {
        g.grad = Vec::Zero(n_);
        g.kink = true;
        return g;
    }
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope>) {
                double best = -kInf, second = -kInf;
                std::size_t arg = 0;
                for (std::size_t k = 0; k < b.facets.size(); ++k) {
                    const double v = b.facets[k].normal.dot(x) / b.facets[k].offset;
                    if (v > best) {
                        second = best;
                        best = v;
                        arg = k;
                    } else if (v > second) {
                        second = v;
                    }
                }
                g.grad = b.facets[arg].normal / b.facets[arg].offset;
                g.kink = best - second <= 1e-12 * std::abs(best);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                const Vec y = b.Ainv * x;
                g.grad = b.Ainv.transpose() * y / y.norm();
            } else {
                const Vec u = x / len;
                std::size_t node = 0;
                if (b.grid->dim() == 2) {
                    const auto& poly = *b.polygon;
                    const double th = angle_of(u(0), u(1));
                    const std::size_t e = polygon_edge(poly, th);
                    node = poly.facet_node[e];
                    const double d0 = std::abs(th - poly.vertex_angle[e]);
                    g.kink = d0 < 1e-12;
                } else {
                    double best = kInf;
                    for (std::size_t i = 0; i < b.grid->size(); ++i) {
                        const double c = b.grid->node(i).dot(u);
                        if (c > 0 && b.h[i] / c < best) {
                            best = b.h[i] / c;
                            node = i;
                        }
                    }
                }
                g.grad = b.grid->node(node) / b.h[node];
            }
        },
        rep_);
    return g;
}

double ConvexBody::volume() const {
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope>) {
                return b.volume;
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return std::abs(b.det) * omega(n_);
            } else {
                if (b.grid->dim() == 2) return b.polygon->area;
                kernels::PointSet normals = b.grid->points();
                normals.w = b.h;
                std::vector<double> r(b.grid->size());
                kernels::polar_min(normals, b.grid->points(), r);
                double v = 0;
                for (std::size_t j = 0; j < r.size(); ++j) v += b.grid->weight(j) * r[j] * r[j] * r[j];
                return v / 3.0;
            }
        },
        rep_);
}

// ---------------------------------------------------------------- free functions

std::vector<double> sample_support(const ConvexBody& K, const SphereGrid& grid) {
    if (K.dim() != grid.dim()) fail(ErrorKind::InvalidArgument, "grid and body dimensions differ");
    std::vector<double> h(grid.size());
    if (const auto* S = std::get_if<SupportSampled>(&K.rep()); S && S->grid->same_layout(grid)) return S->h;
    for (std::size_t i = 0; i < grid.size(); ++i) h[i] = K.support(grid.node(i));
    return h;
}

ConvexBody to_sampled(const ConvexBody& K, GridPtr grid) {
    return ConvexBody::sampled(grid, sample_support(K, *grid));
}

GridPtr grid_of(const ConvexBody& K) {
    if (const auto* S = std::get_if<SupportSampled>(&K.rep())) return S->grid;
    return SphereGrid::standard(K.dim());
}

ConvexBody linear_image(const ConvexBody& K, const Mat& A) {
    if (A.rows() != K.dim() || A.cols() != K.dim()) fail(ErrorKind::InvalidArgument, "matrix size mismatch");
    if (!(std::abs(A.determinant()) > 1e-14)) fail(ErrorKind::InvalidArgument, "linear map is singular");
    return std::visit(
        [&](const auto& b) -> ConvexBody {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope>) {
                std::vector<Vec> v;
                for (const auto& p : b.vertices) v.push_back(A * p);
                return ConvexBody::polytope(v);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return ConvexBody::ellipsoid(A * b.A);
            } else {
                const Mat At = A.transpose();
                std::vector<double> h(b.grid->size());
                for (std::size_t i = 0; i < h.size(); ++i) h[i] = K.support(At * b.grid->node(i));
                return ConvexBody::sampled(b.grid, std::move(h));
            }
        },
        K.rep());
}

ConvexBody dilate(const ConvexBody& K, double c) {
    if (!(c > 0)) fail(ErrorKind::InvalidArgument, "dilation factor must be positive");
    return linear_image(K, Mat::Identity(K.dim(), K.dim()) * c);
}

ConvexBody lr_combination(const ConvexBody& K, const ConvexBody& L, double eps, double r, GridPtr grid) {
    if (K.dim() != L.dim()) fail(ErrorKind::InvalidArgument, "bodies live in different dimensions");
    if (!(eps >= 0) || !(r >= 1)) fail(ErrorKind::InvalidArgument, "lr_combination needs eps >= 0, r >= 1");
    const auto* SK = std::get_if<SupportSampled>(&K.rep());
    const auto* SL = std::get_if<SupportSampled>(&L.rep());
    if (SK && SL && !SK->grid->same_layout(*SL->grid))
        fail(ErrorKind::InvalidArgument, "sampled bodies use incompatible grids");
    if (!grid) grid = SK ? SK->grid : SL ? SL->grid : SphereGrid::standard(K.dim());
    const auto hK = sample_support(K, *grid);
    const auto hL = sample_support(L, *grid);
    std::vector<double> h(grid->size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = r == 1.0 ? hK[i] + eps * hL[i] : std::pow(std::pow(hK[i], r) + eps * std::pow(hL[i], r), 1.0 / r);
    return ConvexBody::sampled(grid, std::move(h));
}

}  // namespace lpc
