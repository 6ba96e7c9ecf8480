// Acceptance run: one pass/fail line per criterion, with its time budget.
#include "lpc/fields.hpp"
#include "lpc/mixed.hpp"
#include "lpc/moment.hpp"
#include "lpc/oracles.hpp"
#include "lpc/params.hpp"
#include "lpc/quadrature.hpp"
#include "lpc/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace lpc;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

InstanceSpec spec_of(GeneratorKind kind, std::uint64_t seed) {
    InstanceSpec s;
    s.kind = kind;
    s.seed = seed;
    return s;
}

GeneratorKind alternate(std::uint64_t seed) {
    return seed % 2 ? GeneratorKind::RandomGridField : GeneratorKind::RadialProfileField;
}

// worst deficit over a batch; errors count as failures
struct Tally {
    double worst = kInf;
    int count = 0;
    int failed = 0;

    void add(const DeficitReport& r, double floor) {
        ++count;
        worst = std::min(worst, r.deficit);
        if (!r.error.empty() || !(r.deficit >= floor)) ++failed;
    }
};

DeficitReport safe_check(CheckId id, const InstanceSpec& s, const ParamSet& ps) {
    try {
        return check_inequality(id, s, ps);
    } catch (const std::exception& e) {
        DeficitReport r;
        r.id = id;
        r.deficit = std::nan("");
        r.error = e.what();
        return r;
    }
}

void criterion_1(Outcome& o) {
    const double e1 = std::abs(omega(2) - kPi), e2 = std::abs(omega(4) - kPi * kPi / 2), e3 = std::abs(c_np(2, 2.0) - 0.25);
    o.require(e1 < 1e-12 && e2 < 1e-12 && e3 < 1e-12, "omega / c_np");
    double worst = 0.0;
    for (ParamSet ps : {ParamSet{2, 1, 1, 2}, ParamSet{2, 2, 1, 3}, ParamSet{2, 2, 1, 0.9}, ParamSet{3, 1, 1, 2}}) {
        const double v = layer_constant(ps).A_or_B, w = oracle::layer_constant_numeric(ps);
        worst = std::max(worst, std::abs(v / w - 1));
    }
    o.require(worst < 1e-8, "layer constant vs minimization");
    o.detail << "omega/c_np err " << std::max({e1, e2, e3}) << ", layer constant rel err " << worst;
}

// int g(x) |<x, xi>|^p dx by direct polar quadrature for an ellipse gauge
double polar_moment(const Field& g, const Vec& xi, double p) {
    const RadialField& rf = g.as_radial();
    const double phase = std::atan2(xi(1), xi(0));
    double total = 0.0;
    for (int half = 0; half < 2; ++half) {
        const double a = phase + kPi / 2 + half * kPi;
        total += quad::composite_gauss(
            [&](double th) {
                const Vec u = vec2(std::cos(th), std::sin(th));
                const double s = rf.gauge.radial(u), c = std::abs(u.dot(xi));
                return quad::radial(
                    [&](double t) { return g.value(t * s * u) * std::pow(t * s * c, p) * t * s * s; },
                    rf.profile.breaks, rf.extent());
            },
            a, a + kPi, 16, 16);
    }
    return total;
}

void criterion_2(Outcome& o) {
    const GridPtr grid = SphereGrid::circle(1024);
    const MomentBody M = moment_body(ConvexBody::ball(2), 2.0, grid);
    double e1 = 0.0, e2 = 0.0, e3 = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i)
        e1 = std::max(e1, std::abs(M.body.support(grid->node(i)) - std::sqrt(kPi) / 2));
    const MomentBody G = centroid_body(ConvexBody::ball(2), 2.0, grid);
    for (std::size_t i = 0; i < grid->size(); ++i) e2 = std::max(e2, std::abs(G.body.support(grid->node(i)) - 1));
    Rng rng(12);
    const ParamSet ps{2, 2.0, 1.0, 2.0};
    for (int trial = 0; trial < 2; ++trial) {
        const ConvexBody K = random_ellipsoid(rng, 2);
        for (const Profile& P : {make_profile("bump", {{"k", 3}}), extremal_G(ps)}) {
            for (double p : {2.0, 3.0}) {
                const Field g = Field::radial(P, K);
                const double factor = std::pow(radial_factor(P, 2, p), p);
                const auto hk = body_moments(K, p, *SphereGrid::circle(8));
                for (std::size_t j = 0; j < 8; ++j) {
                    const double direct = polar_moment(g, SphereGrid::circle(8)->node(j), p);
                    e3 = std::max(e3, std::abs(factor * hk[j] / direct - 1));
                }
            }
        }
    }
    o.require(e1 < 1e-8, "moment body of the disk");
    o.require(e2 < 1e-8, "centroid body of the disk");
    o.require(e3 < 1e-6, "radial factor identity");
    o.detail << "disk moment err " << e1 << ", centroid err " << e2 << ", radial factor rel err " << e3;
}

void criterion_3(Outcome& o) {
    Tally poly, ell, dom, bath;
    double ell_dev = 0.0;
    for (double p : {1.0, 2.0, 3.0})
        for (std::uint64_t s = 0; s < 200; ++s)
            poly.add(safe_check(CheckId::Bp, spec_of(GeneratorKind::RandomPolygon, s), ParamSet{2, p, 1, 2}), 1 - 1e-3);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto r = safe_check(CheckId::Bp, spec_of(GeneratorKind::RandomEllipse, s), ParamSet{2, 2, 1, 2});
        ell.add(r, 1 - 1e-3);
        ell_dev = std::max(ell_dev, std::abs(r.deficit - 1));
    }
    for (std::uint64_t s = 0; s < 100; ++s) {
        const ParamSet ps{2, 1.0 + s % 3, 1, 2};
        dom.add(safe_check(CheckId::BpDomain, spec_of(GeneratorKind::RandomDomain, s), ps), 1 - 1e-3);
        bath.add(safe_check(CheckId::Bathtub, spec_of(GeneratorKind::RandomDomain, s), ps), 1 - 1e-9);
    }
    o.require(poly.failed == 0, "polygons");
    o.require(ell.failed == 0 && ell_dev <= 1e-3, "ellipses");
    o.require(dom.failed == 0, "domains");
    o.require(bath.failed == 0, "bathtub");
    o.detail << poly.count << " polygon checks min " << poly.worst << "; ellipse max |d-1| " << ell_dev << "; "
             << dom.count << " domains min " << dom.worst << "; bathtub min ratio " << bath.worst;
}

void criterion_4(Outcome& o) {
    Rng rng(21);
    double self = 0.0;
    for (int t = 0; t < 10; ++t) {
        const ConvexBody P = random_polygon(rng), E = random_ellipsoid(rng, 2), Q = random_polytope3(rng);
        const ConvexBody S = to_sampled(random_polygon(rng), SphereGrid::circle(1024));
        for (double r : {1.0, 1.5, 2.0})
            for (const ConvexBody* K : {&P, &E, &Q, &S})
                self = std::max(self, std::abs(mixed_volume_r(*K, *K, r) / K->volume() - 1));
    }
    o.require(self < 1e-6, "V_r(K,K) = vol(K)");
    const auto sq = mixed_volume_report(ConvexBody::cube(2), ConvexBody::ball(2), 1.0);
    const double bound = std::sqrt(4.0 * kPi);
    o.require(sq.path == MixedPath::Atomic && std::abs(sq.value - 4) < 1e-12 && sq.value >= bound, "square-disk");
    double dil = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s)
        for (double r : {1.0, 1.5}) {
            const auto rep = safe_check(CheckId::Mixed, spec_of(GeneratorKind::RandomEllipse, s), ParamSet{2, 1, r, 2});
            dil = std::max(dil, std::isnan(rep.deficit) ? kInf : std::abs(rep.deficit - 1));
        }
    o.require(dil <= 1e-4, "dilates");
    double agree = 0.0;
    double worst = kInf;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const Instance in = random_instance(spec_of(GeneratorKind::RandomPolygon, s), ParamSet{2, 1, 1.5, 2});
        const auto rep = mixed_volume_report(*in.K, *in.L, 1.5);
        const double fd = mixed_volume_fd(*in.K, *in.L, 1.5);
        agree = std::max(agree, std::abs(rep.value / fd - 1));
        worst = std::min(worst, rep.value / (std::pow(in.K->volume(), 0.25) * std::pow(in.L->volume(), 0.75)));
    }
    o.require(agree <= 1e-3, "atomic vs finite differences");
    o.require(worst >= 1 - 1e-3, "mixed volume inequality");
    o.detail << "V_r(K,K) rel err " << self << "; V_1(square,disk) " << sq.value << " >= " << bound
             << "; dilates |d-1| " << dil << "; atomic/FD rel diff " << agree;
}

void criterion_5(Outcome& o) {
    const Field cone = Field::radial(make_profile("cone"), ConvexBody::ball(2), 1.0);
    const Field cone_grid = Field::grid(rasterize(cone, 257));
    double golden = 0.0;
    for (const Field* f : {&cone, &cone_grid}) {
        golden = std::max(golden, std::abs(lq_norm(*f, 1) - kPi / 3));
        golden = std::max(golden, std::abs(lq_norm(*f, 2) - std::sqrt(kPi / 6)));
        golden = std::max(golden, std::abs(layer_integral(*f, 0.5) - std::sqrt(kPi) / 2));
        golden = std::max(golden, std::abs(layer_integral(*f, 1.5) - std::pow(kPi, 1.5) / 4));
    }
    o.require(golden < 1e-3, "golden values");
    Rng rng(31);
    double coarea = 0.0;
    for (int t = 0; t < 4; ++t) {
        const Field f = random_radial_field(rng, 2);
        const ConvexBody Q = t % 2 ? random_polygon(rng) : random_ellipsoid(rng, 2);
        for (double r : {1.0, 1.5}) {
            const double integral = quad::composite_gauss(
                [&](double s) { return level_mixed_volume(f, s, Q, r).value; }, 0, f.max_abs(), 16, 8);
            coarea = std::max(coarea, std::abs(integral / functional_mixed_volume(f, Q, r) - 1));
        }
    }
    o.require(coarea < 1e-2, "co-area");
    // int h_B dS_r(f) = int |grad f|^r on a smooth bump
    const Field bump = Field::radial(make_profile("bump", {{"k", 3}}), ConvexBody::ball(2));
    double srf = 0.0;
    for (double r : {1.0, 1.5, 2.0}) {
        const auto m = surface_measure_of_function(bump, r);
        double lhs = 0.0;
        for (std::size_t i = 0; i < m.weight.size(); ++i) lhs += m.weight[i] * ConvexBody::ball(2).support(m.grid->node(i));
        const double exact =
            2 * kPi * quad::finite([&](double s) { return std::pow(6 * s * (1 - s * s) * (1 - s * s), r) * s; }, 0, 1);
        srf = std::max(srf, std::abs(lhs / exact - 1));
    }
    o.require(srf < 1e-3, "surface measure identity");
    o.detail << "golden abs err " << golden << "; co-area rel err " << coarea << "; surface measure rel err " << srf;
}

void criterion_6(Outcome& o) {
    Tally rnd;
    double lo = kInf, hi = -kInf;
    for (double r : {1.2, 1.5}) {
        const ParamSet ps{2, 1.0, r, 2.0};
        for (std::uint64_t s = 0; s < 50; ++s) rnd.add(safe_check(CheckId::T1vmv, spec_of(alternate(s), s), ps), 1 - 1e-2);
        for (std::uint64_t s = 0; s < 3; ++s) {
            const double d = safe_check(CheckId::T1vmv, spec_of(GeneratorKind::ExtremalPair, s), ps).deficit;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    }
    o.require(rnd.failed == 0, "random pairs");
    o.require(lo >= 0.99 && hi <= 1.02, "extremal band");
    o.detail << rnd.count << " random checks min " << rnd.worst << "; extremal deficits in [" << lo << ", " << hi << "]";
}

void criterion_7(Outcome& o) {
    Tally rnd;
    double dev = 0.0;
    for (double lambda : {2.0, 0.8})
        for (std::uint64_t s = 0; s < 50; ++s) {
            const ParamSet ps{2, 1.0 + s % 2, 1.0, lambda};
            for (CheckId id : {CheckId::Taux, CheckId::Lvnp}) rnd.add(safe_check(id, spec_of(alternate(s / 2), s), ps), 1 - 1e-2);
        }
    for (ParamSet ps : {ParamSet{2, 1, 1, 0.8}, ParamSet{2, 2, 1, 0.8}, ParamSet{2, 1, 1, 2}, ParamSet{2, 2, 1, 3}})
        for (CheckId id : {CheckId::Taux, CheckId::Lvnp}) {
            const double d = safe_check(id, spec_of(GeneratorKind::ExtremalPair, 0), ps).deficit;
            dev = std::max(dev, std::isnan(d) ? kInf : std::abs(d - 1));
        }
    o.require(rnd.failed == 0, "random g");
    o.require(dev <= 3e-2, "extremals");
    o.detail << rnd.count << " random checks min " << rnd.worst << "; extremal max |d-1| " << dev;
}

void criterion_8(Outcome& o) {
    Tally rnd;
    std::uint64_t seed = 0;
    for (double r : {1.0, 1.5})
        for (double lambda : {0.8, 2.0})
            for (double p : {1.0, 2.0})
                for (int k = 0; k < 13; ++k, ++seed)
                    rnd.add(safe_check(CheckId::Main, spec_of(alternate(seed), seed), ParamSet{2, p, r, lambda}), 1 - 1e-2);
    const auto ext = safe_check(CheckId::Main, spec_of(GeneratorKind::ExtremalPair, 0), ParamSet{2, 1.0, 1.5, 2.0});
    const auto ext_low = safe_check(CheckId::Main, spec_of(GeneratorKind::ExtremalPair, 1), ParamSet{2, 1.0, 1.5, 0.8});
    double sl = 0.0;
    for (std::uint64_t s = 0; s < 8; ++s) {
        const ParamSet ps{2, 1.0 + s % 2, s % 4 < 2 ? 1.0 : 1.5, s % 3 ? 2.0 : 0.8};
        InstanceSpec a = spec_of(alternate(s), 500 + s), b = a;
        b.transform = true;
        const double da = safe_check(CheckId::Main, a, ps).deficit, db = safe_check(CheckId::Main, b, ps).deficit;
        sl = std::max(sl, std::isnan(da - db) ? kInf : std::abs(da - db));
    }
    o.require(rnd.failed == 0, "random pairs");
    o.require(ext.deficit >= 0.98 && ext.deficit <= 1.05, "extremal pair");
    o.require(ext_low.deficit >= 0.98 && ext_low.deficit <= 1.05, "extremal pair, lambda < 1");
    o.require(sl < 5e-3, "SL(2) invariance");
    o.detail << rnd.count << " random checks min " << rnd.worst << "; extremal " << ext.deficit << " (lambda 2), "
             << ext_low.deficit << " (lambda 0.8); max SL(2) change " << sl;
}

void criterion_9(Outcome& o) {
    double dev = 0.0;
    std::vector<double> support, literal;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto r = safe_check(CheckId::Remark, spec_of(alternate(s), s), ParamSet{2, 1.0 + s % 2, 1, 2});
        if (!r.error.empty()) {
            dev = kInf;
            continue;
        }
        dev = std::max(dev, std::abs(r.deficit - 1));
        support.push_back(r.extras["ratio_support_reading"].get<double>());
        literal.push_back(r.extras["ratio_literal"].get<double>());
    }
    auto cv = [](const std::vector<double>& v) {
        double m = 0.0, q = 0.0;
        for (double x : v) m += x / v.size();
        for (double x : v) q += (x - m) * (x - m) / v.size();
        return std::sqrt(q) / std::abs(m);
    };
    double mean = 0.0;
    for (double x : support) mean += x / support.size();
    o.require(dev <= 1e-3, "Fubini orders");
    o.require(support.size() == 20 && cv(support) < 1e-2, "stable constant");
    o.detail << "max |A/B - 1| " << dev << "; printed sides differ by the constant " << mean << " (CV " << cv(support)
             << ") when the body enters through its support function; literal gauge reading CV " << cv(literal);
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        double budget_s;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "constants", 1, criterion_1},          {2, "moment and centroid bodies", 5, criterion_2},
        {3, "Busemann-Petty", 120, criterion_3},   {4, "mixed volumes", 60, criterion_4},
        {5, "functional layer", 60, criterion_5},  {6, "Sobolev-type mixed volume", 120, criterion_6},
        {7, "moment body of a function", 120, criterion_7}, {8, "main inequality", 300, criterion_8},
        {9, "dual mixed volume identity", 300, criterion_9},
    };
    const auto start = std::chrono::steady_clock::now();
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_s;
        const bool ok = o.pass && in_time;
        all = all && ok;
        std::printf("criterion %d (%s): %s  %.1f s (budget %.0f s)  %s\n", c.number, c.name, ok ? "PASS" : "FAIL", secs,
                    c.budget_s, o.detail.str().c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok10 = all && total < 900;
    std::printf("criterion 10 (full suite): %s  %.1f s (budget 900 s)\n", ok10 ? "PASS" : "FAIL", total);
    return ok10 ? 0 : 1;
}
