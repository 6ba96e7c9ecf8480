#include "lpc/io.hpp"
#include "lpc/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace lpc;

namespace {

InstanceSpec spec_of(GeneratorKind kind, std::uint64_t seed) {
    InstanceSpec s;
    s.kind = kind;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("instances are deterministic") {
    const ParamSet ps{2, 2.0, 1.5, 2.0};
    for (auto kind : {GeneratorKind::RandomPolygon, GeneratorKind::RandomEllipse, GeneratorKind::RandomDomain,
                      GeneratorKind::RandomGridField, GeneratorKind::RadialProfileField, GeneratorKind::ExtremalPair}) {
        const Instance a = random_instance(spec_of(kind, 7), ps);
        const Instance b = random_instance(spec_of(kind, 7), ps);
        CHECK(a.descriptor == b.descriptor);
        if (a.g && a.g->is_grid()) CHECK(a.g->as_grid().values == b.g->as_grid().values);
        if (a.M)
            for (std::size_t i = 0; i < a.M->size(); ++i) {
                CHECK(a.M->ray(i).size() == b.M->ray(i).size());
                CHECK(a.M->ray_power(i, 2) == b.M->ray_power(i, 2));
            }
        const Instance c = random_instance(spec_of(kind, 8), ps);
        CHECK(a.descriptor != c.descriptor);
    }
}

TEST_CASE("generated instances are well formed") {
    const ParamSet ps{2, 1.0, 1.0, 2.0};
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Instance in = random_instance(spec_of(GeneratorKind::RandomPolygon, s), ps);
        const auto& P = std::get<Polytope>(in.K->rep());
        double diam = 0.0;
        for (const Vec& a : P.vertices)
            for (const Vec& b : P.vertices) diam = std::max(diam, (a - b).norm());
        for (const Facet& F : P.facets) CHECK(F.offset >= 1e-3 * diam);

        const Instance fg = random_instance(spec_of(GeneratorKind::RandomGridField, s), ps);
        CHECK(fg.f->nonnegative());
        CHECK(fg.g->nonnegative());
        const Instance rg = random_instance(spec_of(GeneratorKind::RadialProfileField, s), ps);
        CHECK(rg.g->nonnegative());
    }
}

TEST_CASE("unit square against a Monte Carlo oracle") {
    Instance in;
    in.K = ConvexBody::cube(2, 0.5);
    const ParamSet ps{2, 2.0, 1.0, 2.0};
    const DeficitReport r = check_instance(CheckId::Bp, in, ps);
    CHECK(r.deficit > 1);
    CHECK(r.lhs == doctest::Approx(kPi / 3).epsilon(1e-5));
    const double mc = monte_carlo_centroid_volume_square(10'000'000, 11);
    CHECK(std::abs(mc / r.lhs - 1) < 1e-2);
}

TEST_CASE("pass flag follows the slack") {
    const ParamSet ps{2, 2.0, 1.0, 2.0};
    for (std::uint64_t s = 0; s < 5; ++s) {
        const DeficitReport r = check_inequality(CheckId::Bp, spec_of(GeneratorKind::RandomPolygon, s), ps);
        CHECK(r.pass == (r.deficit >= 1 - r.slack));
        CHECK(r.slack == kSlackSet);
        CheckOptions strict;
        strict.slack = -1.0;   // demands deficit >= 2
        const DeficitReport q = check_inequality(CheckId::Bp, spec_of(GeneratorKind::RandomPolygon, s), ps, strict);
        CHECK_FALSE(q.pass);
        CHECK(q.deficit == r.deficit);
    }
}

TEST_CASE("equality cases land in their bands") {
    const ParamSet ps{2, 2.0, 1.5, 2.0};
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto bp = check_inequality(CheckId::Bp, spec_of(GeneratorKind::RandomEllipse, s), ps);
        REQUIRE(bp.band);
        CHECK(bp.in_band);
        const auto mx = check_inequality(CheckId::Mixed, spec_of(GeneratorKind::RandomEllipse, s), ps);
        CHECK(std::abs(mx.deficit - 1) < 1e-4);
        const auto pp = check_inequality(CheckId::Pp, spec_of(GeneratorKind::RandomEllipse, s), ps);
        CHECK(std::abs(pp.deficit - 1) < 1e-3);
    }
    const ParamSet pm{2, 1.0, 1.5, 2.0};
    const auto m = check_inequality(CheckId::Main, spec_of(GeneratorKind::ExtremalPair, 0), pm);
    REQUIRE(m.band);
    CHECK(m.deficit >= 0.98);
    CHECK(m.deficit <= 1.05);
    for (double lambda : {0.8, 2.0}) {
        const ParamSet pt{2, 1.0, 1.5, lambda};
        for (CheckId id : {CheckId::Taux, CheckId::Lvnp}) {
            const auto r = check_inequality(id, spec_of(GeneratorKind::ExtremalPair, 1), pt);
            CHECK(std::abs(r.deficit - 1) <= 3e-2);
        }
    }
}

TEST_CASE("deficits are invariant under determinant-one maps") {
    const ParamSet ps{2, 2.0, 1.5, 0.8};
    struct Case {
        CheckId id;
        GeneratorKind kind;
    };
    for (Case c : {Case{CheckId::Bp, GeneratorKind::RandomPolygon}, Case{CheckId::Taux, GeneratorKind::RandomGridField},
                   Case{CheckId::Main, GeneratorKind::RandomGridField}, Case{CheckId::Main, GeneratorKind::RadialProfileField}}) {
        for (std::uint64_t s = 0; s < 2; ++s) {
            InstanceSpec a = spec_of(c.kind, s), b = a;
            b.transform = true;
            const double da = check_inequality(c.id, a, ps).deficit;
            const double db = check_inequality(c.id, b, ps).deficit;
            CHECK(std::abs(da - db) < 5e-3);
        }
    }
}

TEST_CASE("chain links are ordered on random fields") {
    for (double r : {1.0, 1.5}) {
        const ParamSet ps{2, 2.0, r, r == 1.0 ? 0.8 : 2.0};
        for (std::uint64_t s = 0; s < 2; ++s) {
            const auto rep = check_inequality(CheckId::Chain, spec_of(GeneratorKind::RandomGridField, s), ps);
            CHECK(rep.links.size() == (r == 1.0 ? 6u : 5u));
            CHECK(rep.links_ordered);
            CHECK(rep.pass);
            // the chain ends at the right side of the main inequality
            const auto main = check_inequality(CheckId::Main, spec_of(GeneratorKind::RandomGridField, s), ps);
            CHECK(rep.rhs == doctest::Approx(main.rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("both integration orders of the double integral agree") {
    const ParamSet ps{2, 2.0, 1.0, 2.0};
    for (auto kind : {GeneratorKind::RandomGridField, GeneratorKind::RadialProfileField}) {
        const auto r = check_inequality(CheckId::Remark, spec_of(kind, 3), ps);
        CHECK(std::abs(r.deficit - 1) < 1e-3);
        CHECK(r.extras["ratio_support_reading"].get<double>() == doctest::Approx(2.0).epsilon(1e-3));
    }
}

TEST_CASE("incompatible instances are rejected") {
    const ParamSet ps{2, 2.0, 1.5, 2.0};
    CHECK_THROWS_AS(check_inequality(CheckId::Main, spec_of(GeneratorKind::RandomPolygon, 0), ps), Error);
    CHECK_THROWS_AS(check_inequality(CheckId::Bathtub, spec_of(GeneratorKind::RandomEllipse, 0), ps), Error);
    const ParamSet r1{2, 2.0, 1.0, 2.0};
    CHECK_THROWS_AS(check_inequality(CheckId::T1vmv, spec_of(GeneratorKind::RandomGridField, 0), r1), Error);
    const auto batch = run_batch(CheckId::Main, spec_of(GeneratorKind::RandomPolygon, 0), 2, ps);
    REQUIRE(batch.size() == 2);
    CHECK_FALSE(batch[0].ok());
    CHECK_FALSE(batch[0].error.empty());
}

TEST_CASE("batch output is reproducible") {
    const ParamSet ps{2, 1.0, 1.5, 2.0};
    auto run = [&] {
        std::ostringstream csv, jsonl;
        const auto b = run_batch(CheckId::Taux, spec_of(GeneratorKind::RadialProfileField, 4), 3, ps);
        write_csv(csv, b);
        write_jsonl(jsonl, b);
        return csv.str() + jsonl.str();
    };
    const std::string a = run();
    CHECK(a == run());
    CHECK(a.rfind("id,seed,n,p,r,lambda,lhs,rhs,deficit,pass,time_ms\n", 0) == 0);
}

TEST_CASE("resolution doubling is reported") {
    const ParamSet ps{2, 2.0, 1.5, 2.0};
    CheckOptions opt;
    opt.doubling = true;
    const auto r = check_inequality(CheckId::Bp, spec_of(GeneratorKind::RandomEllipse, 2), ps, opt);
    REQUIRE(r.deficit_doubled);
    CHECK(std::abs(*r.deficit_doubled - 1) <= std::abs(r.deficit - 1) + 1e-9);
    CHECK(to_json(r).contains("deficit_doubled"));
}

TEST_CASE("lambda sweep grid") {
    for (double p : {1.0, 2.0}) {
        const auto grid = lambda_grid(2, p);
        CHECK(grid.size() == 20);
        int below = 0;
        for (double l : grid) {
            CHECK_NOTHROW(validate(ParamSet{2, p, 1.0, l}));
            below += l < 1;
        }
        CHECK(below == 10);
    }
}

TEST_CASE("bodies round-trip through JSON") {
    Rng rng(2);
    for (const ConvexBody& K : {random_polygon(rng), random_ellipsoid(rng, 2), random_polytope3(rng)}) {
        const ConvexBody B = io::body_from_json(io::to_json(K));
        CHECK(B.volume() == doctest::Approx(K.volume()).epsilon(1e-12));
    }
    const ConvexBody S = to_sampled(random_ellipsoid(rng, 2), SphereGrid::circle(256));
    CHECK(io::body_from_json(io::to_json(S)).volume() == doctest::Approx(S.volume()).epsilon(1e-12));
    CHECK(io::parse_body("square").volume() == 4.0);
    CHECK_THROWS_AS(io::parse_body("{\"type\": \"blob\"}"), Error);
    const Field f = Field::radial(rescaled(make_profile("bump", {{"k", 3}}), 2.0, 1.5), ConvexBody::ball(2), 1.5);
    const Field g = io::field_from_json(io::to_json(f));
    CHECK(lq_norm(g, 2) == doctest::Approx(lq_norm(f, 2)).epsilon(1e-12));
}
