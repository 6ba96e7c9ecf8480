#include <doctest.h>

#include "lpc/instances.hpp"
#include "lpc/moment.hpp"
#include "lpc/params.hpp"

#include <Eigen/LU>

#include <cmath>

using namespace lpc;

namespace {

double max_rel(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] / b[i] - 1));
    return m;
}

bool symmetric(const ConvexBody& K, double tol) {
    auto grid = grid_of(K);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec u = grid->node(i);
        if (std::abs(K.support(u) - K.support(-u)) > tol * K.support(u)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("moment body of the disk") {
    const MomentBody M = moment_body(ConvexBody::ball(2), 2);
    auto grid = grid_of(M.body);
    for (std::size_t i = 0; i < grid->size(); ++i)
        CHECK(std::abs(M.body.support(grid->node(i)) - std::sqrt(kPi) / 2) < 1e-8);
    CHECK(std::abs(M.body.support(vec2(3, 4)) - 5 * std::sqrt(kPi) / 2) < 1e-8);
    const MomentBody G = centroid_body(ConvexBody::ball(2), 2);
    for (std::size_t i = 0; i < grid->size(); ++i) CHECK(std::abs(G.body.support(grid->node(i)) - 1) < 1e-8);
    for (double p : {1.0, 1.5, 3.0}) {
        const MomentBody Gp = centroid_body(ConvexBody::ball(2), p);
        CHECK(std::abs(Gp.body.support(vec2(0.6, 0.8)) - 1) < 1e-8);
    }
    const MomentBody G3 = centroid_body(ConvexBody::ball(3), 2);
    CHECK(std::abs(G3.body.support(vec3(0, 0, 1)) - 1) < 1e-3);
}

TEST_CASE("polygon moments against the radial formula") {
    // the square: int |x_1|^p over [-1,1]^2 = 4 / (p+1)
    for (double p : {1.0, 2.0, 2.5}) {
        const MomentBody M = moment_body(ConvexBody::cube(2), p);
        CHECK(std::abs(M.body.support(vec2(1, 0)) - std::pow(4 / (p + 1), 1 / p)) < 1e-12);
    }
    Rng rng(1);
    for (int trial = 0; trial < 5; ++trial) {
        const ConvexBody P = random_polygon(rng);
        const auto grid = SphereGrid::circle(64);
        const auto exact = body_moments(P, 1.5, *grid);
        // sphere-times-radial quadrature on a fine grid, split per vertex angle
        const auto fine = SphereGrid::circle(1 << 16);
        for (std::size_t j = 0; j < grid->size(); ++j) {
            const Vec xi = grid->node(j);
            double s = 0.0;
            for (std::size_t i = 0; i < fine->size(); ++i) {
                const Vec u = fine->node(i);
                s += fine->weight(i) * std::pow(P.radial(u), 3.5) * std::pow(std::abs(u.dot(xi)), 1.5);
            }
            CHECK(std::abs(s / 3.5 / exact[j] - 1) < 1e-5);
        }
    }
}

TEST_CASE("centroid bodies of ellipses and dilates") {
    Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const ConvexBody E = random_ellipsoid(rng, 2);
        const MomentBody G = centroid_body(E, 2, SphereGrid::circle(4096));
        CHECK(std::abs(G.body.volume() / E.volume() - 1) < 1e-5);
        CHECK(symmetric(G.body, 1e-12));
        const MomentBody G3 = centroid_body(dilate(E, 3), 1.5);
        const MomentBody G1 = centroid_body(E, 1.5);
        const auto h3 = std::get<SupportSampled>(G3.body.rep()).h;
        const auto h1 = std::get<SupportSampled>(G1.body.rep()).h;
        for (std::size_t i = 0; i < h1.size(); ++i) CHECK(std::abs(h3[i] - 3 * h1[i]) < 1e-8 * h3[i]);
    }
}

TEST_CASE("Busemann-Petty on bodies") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const ConvexBody P = random_polygon(rng);
        for (double p : {1.0, 2.0, 3.0}) {
            const MomentBody G = centroid_body(P, p);
            CHECK(G.body.volume() >= (1 - 1e-3) * P.volume());
            CHECK(symmetric(G.body, 1e-12));
        }
    }
}

TEST_CASE("field moment bodies") {
    const Field ind = Field::radial(make_profile("indicator"), ConvexBody::ball(2));
    for (double p : {1.0, 2.0, 3.0}) {
        const auto a = field_moments(ind, p, *SphereGrid::standard(2));
        const auto b = body_moments(ConvexBody::ball(2), p, *SphereGrid::standard(2));
        CHECK(max_rel(a, b) < 1e-8);
    }
    CHECK(std::abs(radial_factor(make_profile("indicator"), 2, 1.7) - 1) < 1e-12);
    const ParamSet ps = make_params(2, 1, 1.5, 2);
    CHECK(std::abs(radial_factor(extremal_G(ps), ps) - 0.25) < 1e-12);
    CHECK(std::abs(radial_factor(rescaled(extremal_G(ps), 8, 1), ps) - 8 * 0.25) < 1e-12);
    const ParamSet ps2 = make_params(2, 2, 1.5, 2);
    CHECK(std::abs(radial_factor(rescaled(extremal_G(ps2), 9, 1), ps2) / radial_factor(extremal_G(ps2), ps2) - 3) < 1e-12);

    // radial field on a polygon gauge: factor times M_p K, against the grid field
    Rng rng(4);
    const ConvexBody K = random_polygon(rng);
    const Profile P = make_profile("bump", {{"k", 3}});
    const Field g = Field::radial(P, K);
    for (double p : {1.0, 2.0}) {
        const auto hr = field_moments(g, p, *SphereGrid::standard(2));
        const auto hk = body_moments(K, p, *SphereGrid::standard(2));
        const double factor = std::pow(radial_factor(P, 2, p), p);
        std::vector<double> scaled(hk);
        for (double& v : scaled) v *= factor;
        CHECK(max_rel(hr, scaled) < 1e-12);
        const Field gg = Field::grid(rasterize(g, 513));
        CHECK(max_rel(field_moments(gg, p, *SphereGrid::standard(2)), hr) < 1e-4);
    }

    const ParamSet below = make_params(2, 1, 1.5, 0.8);
    CHECK(radial_tail_fraction(extremal_G(below), 2, 1, 20) > 1e-3);
    CHECK_NOTHROW(radial_factor(extremal_G(below), below));
    Profile heavy;
    heavy.value = [](double t) { return std::pow(1 + t, -3.5); };
    heavy.derivative = [](double t) { return -3.5 * std::pow(1 + t, -4.5); };
    CHECK_THROWS_AS(radial_factor(heavy, 2, 1), Error);

    GridField zero;
    zero.n = 2;
    zero.lo = vec2(-1, -1);
    zero.h = 0.5;
    zero.shape = {5, 5, 1};
    zero.values.assign(25, 0.0);
    CHECK_THROWS_AS(moment_body(Field::grid(zero), 2), Error);
}

TEST_CASE("degenerate sources") {
    auto grid = SphereGrid::circle(16);
    std::vector<std::vector<Interval>> rays(16);
    rays[0] = {{0, 1}};
    rays[8] = {{0, 1}};
    CHECK_THROWS_AS(moment_body(CompactDomain(grid, rays), 2), Error);
    try {
        moment_body(CompactDomain(grid, rays), 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateSource);
    }
}

TEST_CASE("covariance and layer cake of field moments") {
    Rng rng(8);
    for (int trial = 0; trial < 3; ++trial) {
        const BumpMixture b = random_bumps(rng, 2);
        const Mat A = random_sl(rng, 2) * 1.3;
        const Field g = b.sample(257);
        const Field gA = b.transformed(A).sample(257);
        const auto grid = SphereGrid::circle(256);
        const auto h = field_moments(g, 2, *grid);
        const auto hA = field_moments(gA, 2, *grid);
        // h_{M_p(g o A^{-1})}(xi)^p = |det A| h_{M_p g}(A^T xi)^p
        std::vector<Vec> pulled;
        for (std::size_t j = 0; j < grid->size(); ++j) pulled.push_back(A.transpose() * grid->node(j));
        const auto hp = field_moments(g, 2, pulled);
        const double det = std::abs(A.determinant());
        for (std::size_t j = 0; j < grid->size(); ++j) CHECK(std::abs(hA[j] / (det * hp[j]) - 1) < 1e-5);

        // layer cake over uniform levels
        for (int levels : {64, 512}) {
        const double top = g.max_abs();
        std::vector<double> acc(grid->size(), 0.0);
        const GridField& gf = g.as_grid();
        for (int k = 0; k < levels; ++k) {
            const double t = (k + 0.5) * top / levels;
            kernels::PointSet pts;
            for (std::size_t i = 0; i < gf.size(); ++i)
                if (gf.values[i] >= t) {
                    const Vec x = gf.point(i);
                    pts.push(x(0), x(1), gf.cell_volume());
                }
            std::vector<double> out(grid->size());
            kernels::abs_moments(pts, grid->points(), 2, out);
            for (std::size_t j = 0; j < out.size(); ++j) acc[j] += out[j] * top / levels;
        }
        CHECK(max_rel(acc, h) < (levels == 64 ? 1e-2 : 1e-3));
        }
    }
}
