#pragma once

#include "lpc/core.hpp"
#include "lpc/kernels.hpp"

#include <array>
#include <memory>
#include <variant>
#include <vector>

namespace lpc {

/// Quadrature nodes on S^{n-1}: uniform angles for n = 2, Gauss-Legendre in
/// cos(theta) times uniform phi for n = 3. Node i of the n = 3 grid sits at
/// ring i / n_phi, column i % n_phi; rings are ordered by increasing theta.
class SphereGrid {
public:
    static std::shared_ptr<const SphereGrid> circle(int nodes = 1024);
    static std::shared_ptr<const SphereGrid> sphere(int n_theta = 64, int n_phi = 128);
    static std::shared_ptr<const SphereGrid> standard(int n);

    int dim() const { return n_; }
    std::size_t size() const { return pts_.size(); }
    Vec node(std::size_t i) const;
    double weight(std::size_t i) const { return pts_.w[i]; }
    const kernels::PointSet& points() const { return pts_; }
    int n_theta() const { return n_theta_; }
    int n_phi() const { return n_phi_; }
    double total_weight() const;

    /// Node closest to the direction of u.
    std::size_t nearest(const Vec& u) const;

    /// Interpolation stencil for a function sampled on the nodes, evaluated
    /// in the direction of u: linear in angle (n = 2), bilinear in (theta, phi).
    struct Stencil {
        std::array<std::size_t, 4> index{};
        std::array<double, 4> weight{};
        int count = 0;
    };
    Stencil stencil(const Vec& u) const;
    double interpolate(const std::vector<double>& values, const Vec& u) const;

    bool same_layout(const SphereGrid& other) const;

private:
    int n_ = 2;
    int n_theta_ = 0;
    int n_phi_ = 0;
    std::vector<double> theta_;
    kernels::PointSet pts_;
};

using GridPtr = std::shared_ptr<const SphereGrid>;

struct Facet {
    Vec normal;
    double offset = 0.0;   // h_K(normal)
    double area = 0.0;     // edge length for n = 2
};

struct Polytope {
    int n = 2;
    std::vector<Vec> vertices;   // extreme points; counter-clockwise for n = 2
    std::vector<Facet> facets;
    double volume = 0.0;
};

struct Ellipsoid {
    Mat A;      // body = A * unit ball
    Mat Ainv;
    double det = 0.0;
};

/// Exact circumscribed polygon of sampled support values: the intersection of
/// the half-planes <x, u_i> <= h_i.
struct CircumPolygon {
    std::vector<Vec> vertices;            // counter-clockwise
    std::vector<std::size_t> facet_node;  // grid node of the edge from vertex k to k+1
    std::vector<double> vertex_angle;     // angle of vertex k in [0, 2pi)
    double area = 0.0;
};

struct SupportSampled {
    GridPtr grid;
    std::vector<double> h;
    std::shared_ptr<const CircumPolygon> polygon;   // n = 2 only
};

struct GaugeGradient {
    Vec grad;
    bool kink = false;
};

class ConvexBody {
public:
    using Rep = std::variant<Polytope, Ellipsoid, SupportSampled>;

    static ConvexBody polytope(const std::vector<Vec>& points);
    static ConvexBody ellipsoid(const Mat& A);
    static ConvexBody sampled(GridPtr grid, std::vector<double> h);
    static ConvexBody ball(int n, double radius = 1.0);
    static ConvexBody cube(int n, double half = 1.0);

    int dim() const { return n_; }
    const Rep& rep() const { return rep_; }
    bool is_polytope() const { return std::holds_alternative<Polytope>(rep_); }
    bool is_ellipsoid() const { return std::holds_alternative<Ellipsoid>(rep_); }
    bool is_sampled() const { return std::holds_alternative<SupportSampled>(rep_); }

    double support(const Vec& xi) const;
    double radial(const Vec& u) const;
    double gauge(const Vec& x) const;
    GaugeGradient gauge_gradient(const Vec& x) const;
    double volume() const;

private:
    ConvexBody(int n, Rep rep) : n_(n), rep_(std::move(rep)) {}
    int n_;
    Rep rep_;
};

std::vector<double> sample_support(const ConvexBody& K, const SphereGrid& grid);
ConvexBody to_sampled(const ConvexBody& K, GridPtr grid);

ConvexBody linear_image(const ConvexBody& K, const Mat& A);
ConvexBody dilate(const ConvexBody& K, double c);

/// Body with support (h_K^r + eps h_L^r)^{1/r} on a shared grid (that of a
/// sampled operand, otherwise the standard grid).
ConvexBody lr_combination(const ConvexBody& K, const ConvexBody& L, double eps, double r, GridPtr grid = nullptr);

CircumPolygon circumscribed_polygon(const SphereGrid& grid, const std::vector<double>& h);

/// Grid of a sampled body, or the standard grid for its dimension.
GridPtr grid_of(const ConvexBody& K);

/// Angle of a 2-vector in [0, 2pi).
double angle_of(double x, double y);

}  // namespace lpc
