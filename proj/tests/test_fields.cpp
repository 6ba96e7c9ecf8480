#include <doctest.h>

#include "lpc/fields.hpp"
#include "lpc/instances.hpp"
#include "lpc/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace lpc;

namespace {

Field cone(int n = 2) { return Field::radial(make_profile("cone"), ConvexBody::ball(n)); }

Field cone_grid(int nodes = 257) { return Field::grid(rasterize(cone(), nodes)); }

}  // namespace

TEST_CASE("lq norms of the cone") {
    CHECK(std::abs(lq_norm(cone(), 1) - kPi / 3) < 1e-10);
    CHECK(std::abs(lq_norm(cone(), 2) - std::sqrt(kPi / 6)) < 1e-10);
    CHECK(std::abs(lq_norm(cone(3), 1) - kPi / 3) < 1e-10);
    const Field g = cone_grid();
    CHECK(std::abs(lq_norm(g, 1) - kPi / 3) < 1e-3);
    CHECK(std::abs(lq_norm(g, 2) - std::sqrt(kPi / 6)) < 1e-3);
    const Field c3 = Field::radial(rescaled(make_profile("cone"), 3.0, 1.0), ConvexBody::ball(2));
    CHECK(std::abs(lq_norm(c3, 1.5) - 3 * lq_norm(cone(), 1.5)) < 1e-10);
}

TEST_CASE("level volumes") {
    CHECK(std::abs(level_volume(cone(), 0.5) - kPi / 4) < 1e-12);
    CHECK(level_volume(cone(), 1.5) == 0.0);
    const Field g = cone_grid();
    CHECK(std::abs(level_volume(g, 0.5) - kPi / 4) < 1e-3);
    CHECK(level_volume(g, 1.01) == 0.0);
    std::vector<double> ts;
    for (int k = 1; k <= 32; ++k) ts.push_back(k / 32.0);
    const auto vols = level_volumes(g, ts);
    for (std::size_t k = 1; k < vols.size(); ++k) CHECK(vols[k] <= vols[k - 1]);
    CHECK_THROWS_AS(level_volume(g, 0.0), Error);
    // square gauge
    const Field sq = Field::radial(make_profile("cone"), ConvexBody::cube(2));
    CHECK(std::abs(level_volume(sq, 0.25) - 4 * 0.75 * 0.75) < 1e-12);
    const Field ind = Field::radial(make_profile("indicator"), ConvexBody::ball(2));
    CHECK(std::abs(level_volume(ind, 1.0) - kPi) < 1e-12);
}

TEST_CASE("layer integrals") {
    for (const Field& f : {cone(), cone_grid()}) {
        const double tol = f.is_grid() ? 1e-3 : 1e-10;
        CHECK(std::abs(layer_integral(f, 0.5) - std::sqrt(kPi) / 2) < tol);
        CHECK(std::abs(layer_integral(f, 1.5) - std::pow(kPi, 1.5) / 4) < tol);
        CHECK(std::abs(layer_integral(f, 1.0) - lq_norm(f, 1)) < 1e-4);
    }
    const Field ind = Field::radial(make_profile("indicator"), ConvexBody::ball(2));
    CHECK(std::abs(layer_integral(ind, 0.5) - std::sqrt(kPi)) < 1e-10);
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const Field g = random_bumps(rng, 2).sample(257);
        CHECK(std::abs(layer_integral(g, 1.0) / lq_norm(g, 1) - 1) < 1e-4);
        // int vol^{1/2} dt >= ||g||_2 in the plane
        CHECK(layer_integral(g, 0.5) >= (1 - 1e-3) * lq_norm(g, 2));
    }
}

TEST_CASE("gradients") {
    const auto v = gradient_eval(cone(), vec2(0.5, 0));
    CHECK(std::abs(v.grad(0) + 1) < 1e-14);
    CHECK(std::abs(v.grad(1)) < 1e-14);
    CHECK(gradient_eval(cone(), vec2(2, 0)).grad.norm() == 0.0);
    CHECK(gradient_eval(cone_grid(), vec2(2, 0)).grad.norm() == 0.0);
    const Field sq = Field::radial(make_profile("cone"), ConvexBody::cube(2));
    CHECK(gradient_eval(sq, vec2(0.5, 0.5)).kink);
    CHECK(!gradient_eval(sq, vec2(0.5, 0.1)).kink);

    // central differences converge at second order on a smooth profile
    const Field smooth = Field::radial(make_profile("bump", {{"k", 4}}), ConvexBody::ellipsoid(vec2(1.0, 0.7).asDiagonal()));
    double err[2];
    int i = 0;
    for (int nodes : {129, 257}) {
        const Field g = Field::grid(rasterize(smooth, nodes));
        const GridField& gf = g.as_grid();
        const double step = 2 * (-gf.lo(0)) / 128;   // coarse node spacing
        double e = 0.0;
        for (double x = gf.lo(0) + 16 * step; x < -gf.lo(0) - 15 * step; x += 8 * step)
            for (double y = gf.lo(1) + 16 * step; y < -gf.lo(1) - 15 * step; y += 8 * step) {
                const Vec p = vec2(x, y);
                e = std::max(e, (gradient_eval(g, p).grad - gradient_eval(smooth, p).grad).norm());
            }
        err[i++] = e;
    }
    CHECK(err[0] / err[1] > 3.5);
    CHECK(err[0] / err[1] < 4.5);
}

TEST_CASE("surface measure of a function") {
    const auto m = surface_measure_of_function(cone(), 1.0);
    double total = 0.0;
    std::array<double, 8> sector{};
    for (std::size_t i = 0; i < m.weight.size(); ++i) {
        total += m.weight[i];
        sector[i * 8 / m.weight.size()] += m.weight[i];
    }
    CHECK(std::abs(total - kPi) < 1e-2 * kPi);
    for (double s : sector) CHECK(std::abs(s - kPi / 8) < 0.05 * kPi / 8);

    // integrating h_B against the measure reproduces int |grad f|^r
    const Field bump = Field::radial(make_profile("bump", {{"k", 3}}), ConvexBody::ball(2));
    for (double r : {1.0, 1.5, 2.0}) {
        const auto mb = surface_measure_of_function(bump, r);
        double lhs = 0.0;
        for (double w : mb.weight) lhs += w;
        const double exact =
            2 * kPi * quad::finite([&](double s) { return std::pow(6 * s * (1 - s * s) * (1 - s * s), r) * s; }, 0, 1);
        CHECK(std::abs(lhs / exact - 1) < 1e-3);
    }

    // support of the measure spans the plane
    Rng rng(3);
    const Field g = random_bumps(rng, 2).sample(129);
    const auto mg = surface_measure_of_function(g, 1.0);
    Eigen::Matrix2d S = Eigen::Matrix2d::Zero();
    for (std::size_t i = 0; i < mg.weight.size(); ++i) {
        const Vec u = mg.grid->node(i);
        S += mg.weight[i] * u * u.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(S);
    CHECK(es.eigenvalues()(0) > 1e-3 * es.eigenvalues()(1));

    GridField zero;
    zero.n = 2;
    zero.lo = vec2(-1, -1);
    zero.h = 0.5;
    zero.shape = {5, 5, 1};
    zero.values.assign(25, 0.0);
    CHECK_THROWS_AS(surface_measure_of_function(Field::grid(zero), 1.0), Error);
}

TEST_CASE("grid field validation") {
    GridField g;
    g.n = 2;
    g.lo = vec2(-1, -1);
    g.h = 0.5;
    g.shape = {5, 5, 1};
    g.values.assign(25, 0.0);
    g.values[12] = 1.0;
    CHECK_NOTHROW(Field::grid(g));
    g.values[0] = 0.1;
    CHECK_THROWS_AS(Field::grid(g), Error);
    g.values[0] = 0.0;
    g.values.pop_back();
    CHECK_THROWS_AS(Field::grid(g), Error);
    CHECK(cone_grid(65).nonnegative());
    const Field neg = Field::radial(rescaled(make_profile("cone"), -1.0, 1.0), ConvexBody::ball(2));
    CHECK(!neg.nonnegative());
    CHECK_THROWS_AS(require_nonnegative(neg), Error);
    CHECK(std::abs(level_volume(neg, 0.5) - kPi / 4) < 1e-12);
}

TEST_CASE("contours") {
    const GridField& g = cone_grid().as_grid();
    double len = 0.0;
    for (const Segment& s : contour(g, 0.5)) len += (s.b - s.a).norm();
    CHECK(std::abs(len - kPi) < 1e-3);
    CHECK(contour(g, 2.0).empty());
}

TEST_CASE("three-dimensional fields") {
    const Field c = cone(3);
    const Field g = Field::grid(rasterize(c, 65));
    const double exact = 4 * kPi / 3 / 8;
    CHECK(std::abs(level_volume(g, 0.5) / exact - 1) < 1e-2);
    CHECK(std::abs(lq_norm(g, 1) / (kPi / 3) - 1) < 1e-2);
    CHECK(std::abs(layer_integral(g, 1.0) / lq_norm(g, 1) - 1) < 1e-4);
}
