#include "lpc/verify.hpp"

#include "lpc/io.hpp"
#include "lpc/mixed.hpp"
#include "lpc/moment.hpp"
#include "lpc/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace lpc {

using nlohmann::json;

const char* to_string(CheckId id) noexcept {
    switch (id) {
        case CheckId::Bp: return "bp";
        case CheckId::BpDomain: return "bp-domain";
        case CheckId::Bathtub: return "bathtub";
        case CheckId::Mixed: return "mixed";
        case CheckId::Pp: return "pp";
        case CheckId::Bmvm: return "bmvm";
        case CheckId::T1vmv: return "t1vmv";
        case CheckId::Taux: return "taux";
        case CheckId::Lnf: return "lnf";
        case CheckId::Lvnp: return "lvnp";
        case CheckId::Main: return "main";
        case CheckId::Chain: return "chain";
        case CheckId::Remark: return "remark";
    }
    return "?";
}

std::vector<CheckId> all_checks() {
    return {CheckId::Bp,    CheckId::BpDomain, CheckId::Bathtub, CheckId::Mixed, CheckId::Pp,
            CheckId::Bmvm,  CheckId::T1vmv,    CheckId::Taux,    CheckId::Lnf,   CheckId::Lvnp,
            CheckId::Main,  CheckId::Chain,    CheckId::Remark};
}

CheckId check_from_string(const std::string& s) {
    for (CheckId id : all_checks())
        if (s == to_string(id)) return id;
    fail(ErrorKind::InvalidArgument, "unknown check id: " + s);
}

GeneratorKind default_generator(CheckId id) {
    switch (id) {
        case CheckId::Bp:
        case CheckId::Mixed:
        case CheckId::Pp: return GeneratorKind::RandomPolygon;
        case CheckId::BpDomain:
        case CheckId::Bathtub:
        case CheckId::Bmvm: return GeneratorKind::RandomDomain;
        default: return GeneratorKind::RandomGridField;
    }
}

double default_slack(CheckId id) {
    switch (id) {
        case CheckId::Bp:
        case CheckId::BpDomain:
        case CheckId::Mixed:
        case CheckId::Lnf:
        case CheckId::Remark: return kSlackSet;
        case CheckId::Bathtub: return kSlackChain;
        default: return kSlackFunction;
    }
}

Resolution Resolution::doubled() const {
    Resolution d = *this;
    d.circle_nodes *= 2;
    d.sphere_theta *= 2;
    d.sphere_phi *= 2;
    d.field_nodes = 2 * field_nodes - 1;
    d.field_nodes_3d = 2 * field_nodes_3d - 1;
    d.levels *= 2;
    return d;
}

GridPtr Resolution::directions(int n) const {
    return n == 2 ? SphereGrid::circle(circle_nodes) : SphereGrid::sphere(sphere_theta, sphere_phi);
}

json Resolution::to_json() const {
    return {{"circle_nodes", circle_nodes}, {"sphere_theta", sphere_theta}, {"sphere_phi", sphere_phi},
            {"field_nodes", field_nodes},   {"field_nodes_3d", field_nodes_3d}, {"levels", levels}};
}

namespace {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

json bumps_json(const BumpMixture& m) {
    json out = json::array();
    for (const Bump& b : m.bumps)
        out.push_back({{"center", io::to_json(b.center)}, {"A", io::to_json(b.A)}, {"weight", b.weight}, {"power", b.power}});
    return out;
}

Field transformed_radial(const Field& f, const Mat& T) {
    const RadialField& r = f.as_radial();
    return Field::radial(r.profile, linear_image(r.gauge, T), r.R);
}

}  // namespace

Instance random_instance(const InstanceSpec& spec, const ParamSet& ps) {
    const int n = spec.n;
    if (n != 2 && n != 3) fail(ErrorKind::InvalidArgument, "instances live in dimension 2 or 3");
    Rng rng(spec.seed);
    Instance in;
    in.spec = spec;
    json d = {{"generator", to_string(spec.kind)}, {"seed", spec.seed}, {"n", n}};
    Mat T = Mat::Identity(n, n);
    if (spec.transform) {
        Rng trng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
        T = random_sl(trng, n);
        d["transform"] = io::to_json(T);
    }
    auto image = [&](const ConvexBody& K) { return spec.transform ? linear_image(K, T) : K; };
    auto random_body = [&]() { return n == 2 ? random_polygon(rng) : random_polytope3(rng); };

    switch (spec.kind) {
        case GeneratorKind::RandomPolygon:
            in.K = image(random_body());
            in.L = image(random_body());
            break;
        case GeneratorKind::RandomEllipse: {
            const ConvexBody K = random_ellipsoid(rng, n);
            const double c = uniform(rng, 0.5, 2.0);
            in.K = image(K);
            in.L = image(dilate(K, c));
            d["dilation"] = c;
            break;
        }
        case GeneratorKind::RandomDomain: {
            if (spec.transform) fail(ErrorKind::Unsupported, "random domains cannot be transformed");
            in.M = random_domain(rng, spec.res.directions(n));
            if (n == 2) in.star = random_star_polygon(rng);
            in.K = random_body();
            d["domain_volume"] = domain_volume(*in.M);
            break;
        }
        case GeneratorKind::RandomGridField: {
            BumpMixture fb = random_bumps(rng, n), gb = random_bumps(rng, n);
            in.K = image(random_body());
            if (spec.transform) {
                fb = fb.transformed(T);
                gb = gb.transformed(T);
            }
            in.f = fb.sample(spec.res.nodes(n));
            in.g = gb.sample(spec.res.nodes(n));
            d["f_bumps"] = bumps_json(fb);
            d["g_bumps"] = bumps_json(gb);
            break;
        }
        case GeneratorKind::RadialProfileField: {
            Field f = random_radial_field(rng, n);
            Field g = random_radial_field(rng, n);
            const ConvexBody K = n == 2 && std::bernoulli_distribution(0.5)(rng) ? random_polygon(rng)
                                                                                 : random_ellipsoid(rng, n);
            in.K = image(K);
            in.f = spec.transform ? transformed_radial(f, T) : f;
            in.g = spec.transform ? transformed_radial(g, T) : g;
            break;
        }
        case GeneratorKind::ExtremalPair: {
            validate(ps);
            const ConvexBody K = image(random_ellipsoid(rng, n));
            in.K = K;
            if (ps.r > 1)
                in.f = Field::radial(extremal_F(ps), K);
            else
                in.f = Field::radial(make_profile("cone"), K, 1.0);
            in.truncated = ps.lambda < 1;
            in.g = Field::radial(extremal_G(ps), K, in.truncated ? spec.R : kInf);
            in.extremal = true;
            if (in.truncated) d["R"] = spec.R;
            break;
        }
    }
    if (in.K) d["K"] = io::to_json(*in.K);
    if (in.L) d["L"] = io::to_json(*in.L);
    if (in.f && !in.f->is_grid()) d["f"] = io::to_json(*in.f);
    if (in.g && !in.g->is_grid()) d["g"] = io::to_json(*in.g);
    if (!in.star.empty()) {
        json s = json::array();
        for (const Vec& v : in.star) s.push_back(io::to_json(v));
        d["star"] = s;
    }
    in.descriptor = std::move(d);
    return in;
}

namespace {

struct Partial {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::optional<std::pair<double, double>> band;
    std::vector<ChainLink> links;
    json extras = json::object();
};

template <class T>
const T& need(const std::optional<T>& v, CheckId id, const char* what) {
    if (!v) fail(ErrorKind::InvalidArgument, std::string("check ") + to_string(id) + " needs " + what);
    return *v;
}

std::pair<double, double> around_one(double tol) { return {1 - tol, 1 + tol}; }

// a ||g||_1^{e1} ||g||_lambda^{-e2}
double layer_bound(const Field& g, const ParamSet& ps, json& extras) {
    const LayerConstant lc = layer_constant(ps);
    const LayerExponents ex = layer_exponents(ps);
    const double g1 = lq_norm(g, 1.0), gl = lq_norm(g, ps.lambda);
    extras["norm_1"] = g1;
    extras["norm_lambda"] = gl;
    extras["a"] = lc.a;
    return lc.a * std::pow(g1, ex.e1) * std::pow(gl, -ex.e2);
}

// int g(y) h_B(y)^p dy
double weighted_support_integral(const Field& g, const ConvexBody& B, double p) {
    const int n = g.dim();
    if (g.is_grid()) {
        const GridField& gf = g.as_grid();
        double s = 0.0;
        for (std::size_t i = 0; i < gf.size(); ++i) {
            if (gf.values[i] == 0) continue;
            const Vec y = gf.point(i);
            if (y.norm() == 0) continue;
            s += gf.values[i] * std::pow(B.support(y), p);
        }
        return s * gf.cell_volume();
    }
    const RadialField& rf = g.as_radial();
    const Profile& G = rf.profile;
    const double radial = quad::radial([&](double t) { return G.value(t) * std::pow(t, n + p - 1); }, G.breaks, rf.extent());
    const GridPtr grid = n == 2 ? SphereGrid::circle(8192) : SphereGrid::standard(3);
    double sph = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec u = grid->node(i);
        sph += grid->weight(i) * std::pow(rf.gauge.radial(u), n + p) * std::pow(B.support(u), p);
    }
    return radial * sph;
}

double truncated_slack(const Instance& in) { return in.truncated ? kSlackTruncated : kSlackFunction; }

Partial check_bp(const Instance& in, const ParamSet& ps) {
    const ConvexBody& K = need(in.K, CheckId::Bp, "a convex body");
    const MomentBody G = centroid_body(K, ps.p, in.spec.res.directions(K.dim()));
    Partial out;
    out.lhs = G.body.volume();
    out.rhs = K.volume();
    out.slack = kSlackSet;
    if (K.is_ellipsoid()) out.band = around_one(1e-3);
    return out;
}

Partial check_bp_domain(const Instance& in, const ParamSet& ps) {
    const CompactDomain& M = need(in.M, CheckId::BpDomain, "a compact domain");
    const MomentBody G = centroid_body(M, ps.p);
    Partial out;
    out.lhs = G.body.volume();
    out.rhs = domain_volume(M);
    out.slack = kSlackSet;
    return out;
}

Partial check_bathtub(const Instance& in, const ParamSet& ps) {
    const CompactDomain& M = need(in.M, CheckId::Bathtub, "a compact domain");
    const CompactDomain SM = sm_symmetrize(M);
    const auto mM = domain_moments(M, ps.p, M.grid());
    const auto mS = domain_moments(SM, ps.p, M.grid());
    std::size_t worst = 0;
    for (std::size_t j = 1; j < mM.size(); ++j)
        if (mM[j] * mS[worst] < mM[worst] * mS[j]) worst = j;
    Partial out;
    out.lhs = mM[worst];
    out.rhs = mS[worst];
    out.slack = kSlackChain;
    out.extras["nodes"] = mM.size();
    out.extras["worst_node"] = worst;
    return out;
}

Partial check_mixed(const Instance& in, const ParamSet& ps) {
    const ConvexBody& K = need(in.K, CheckId::Mixed, "a pair of bodies");
    const ConvexBody& L = need(in.L, CheckId::Mixed, "a pair of bodies");
    const int n = K.dim();
    const MixedVolumeReport rep = mixed_volume_report(K, L, ps.r);
    Partial out;
    out.lhs = rep.value;
    out.rhs = std::pow(K.volume(), (n - ps.r) / n) * std::pow(L.volume(), ps.r / n);
    out.slack = kSlackSet;
    if (in.spec.kind == GeneratorKind::RandomEllipse) out.band = around_one(1e-4);
    out.extras["path"] = to_string(rep.path);
    out.extras["fallback"] = rep.fallback;
    out.extras["rel_diff"] = rep.rel_diff;
    return out;
}

Partial check_pp(const Instance& in, const ParamSet& ps) {
    const ConvexBody& K = need(in.K, CheckId::Pp, "a pair of bodies");
    const int n = K.dim();
    const MomentBody Mp = moment_body(K, ps.p, in.spec.res.directions(n));
    const bool dual = in.spec.kind == GeneratorKind::RandomEllipse;
    const ConvexBody L = dual ? Mp.body : need(in.L, CheckId::Pp, "a pair of bodies");
    Partial out;
    out.lhs = mixed_volume_r(L, Mp.body, ps.r);
    out.rhs = std::pow(c_np(ps), ps.r / ps.p) * std::pow(L.volume(), (n - ps.r) / n) *
              std::pow(K.volume(), (n + ps.p) * ps.r / (n * ps.p));
    out.slack = kSlackFunction;
    if (dual) {
        out.band = around_one(1e-3);
        out.extras["L"] = "moment body of K";
    }
    return out;
}

Partial check_bmvm(const Instance& in, const ParamSet&) {
    if (in.star.empty()) fail(ErrorKind::InvalidArgument, "check bmvm needs a planar star polygon");
    const ConvexBody& K = need(in.K, CheckId::Bmvm, "a convex body");
    const int n = 2;
    Partial out;
    out.lhs = std::pow(polygon_mixed_volume_1(in.star, K), n);
    out.rhs = std::pow(polygon_area(in.star), n - 1) * K.volume();
    out.slack = kSlackFunction;
    return out;
}

Partial check_t1vmv(const Instance& in, const ParamSet& ps) {
    const Field& f = need(in.f, CheckId::T1vmv, "a field f");
    const ConvexBody& K = need(in.K, CheckId::T1vmv, "a convex body");
    if (!(ps.r > 1)) fail(ErrorKind::InvalidArgument, "check t1vmv needs 1 < r < n");
    const int n = f.dim();
    Partial out;
    out.lhs = functional_mixed_volume(f, K, ps.r);
    const double fq = lq_norm(f, ps.q());
    out.rhs = std::pow(c1(ps), ps.r) * std::pow(fq, ps.r) * std::pow(K.volume(), ps.r / n);
    out.slack = kSlackFunction;
    if (in.extremal) out.band = std::make_pair(0.99, 1.02);
    out.extras["norm_q"] = fq;
    return out;
}

Partial check_taux(const Instance& in, const ParamSet& ps) {
    const Field& g = need(in.g, CheckId::Taux, "a field g");
    const int n = g.dim();
    const MomentBody Mg = moment_body(g, ps.p, in.spec.res.directions(n));
    Partial out;
    out.lhs = std::pow(Mg.body.volume(), ps.p / n);
    out.rhs = c_np(ps) * layer_bound(g, ps, out.extras);
    out.slack = truncated_slack(in);
    if (in.extremal) out.band = around_one(kSlackTruncated);
    if (in.truncated) out.extras["tail_fraction"] = radial_tail_fraction(g.as_radial().profile, n, ps.p, g.as_radial().R);
    return out;
}

Partial check_lnf(const Instance& in, const ParamSet&) {
    const Field& f = need(in.f, CheckId::Lnf, "a field f");
    const int n = f.dim();
    Partial out;
    out.lhs = layer_integral(f, (n - 1.0) / n);
    out.rhs = lq_norm(f, n / (n - 1.0));
    out.slack = kSlackSet;
    return out;
}

Partial check_lvnp(const Instance& in, const ParamSet& ps) {
    const Field& g = need(in.g, CheckId::Lvnp, "a field g");
    const int n = g.dim();
    Partial out;
    out.lhs = layer_integral(g, (n + ps.p) / n);
    out.rhs = layer_bound(g, ps, out.extras);
    out.slack = truncated_slack(in);
    if (in.extremal) out.band = around_one(kSlackTruncated);
    return out;
}

double main_rhs(const Field& f, const Field& g, const ParamSet& ps, json& extras) {
    const double fq = lq_norm(f, ps.q());
    extras["norm_q"] = fq;
    extras["C"] = c_main(ps);
    const double bound = layer_bound(g, ps, extras);
    // C ||g||_1^{e1 r/p} ||g||_l^{-e2 r/p} ||f||_q^r, with C = n c1^r (c a)^{r/p}
    return c_main(ps) * std::pow(bound / layer_constant(ps).a, ps.r / ps.p) * std::pow(fq, ps.r);
}

Partial check_main(const Instance& in, const ParamSet& ps) {
    const Field& f = need(in.f, CheckId::Main, "a pair of fields");
    const Field& g = need(in.g, CheckId::Main, "a pair of fields");
    const int n = f.dim();
    const MomentBody Mg = moment_body(g, ps.p, in.spec.res.directions(n));
    Partial out;
    out.lhs = n * functional_mixed_volume(f, Mg.body, ps.r);
    out.rhs = main_rhs(f, g, ps, out.extras);
    out.slack = truncated_slack(in);
    if (in.extremal && ps.r > 1) out.band = std::make_pair(0.98, 1.05);
    return out;
}

Partial check_chain(const Instance& in, const ParamSet& ps) {
    const Field& f = need(in.f, CheckId::Chain, "a pair of fields");
    const Field& g = need(in.g, CheckId::Chain, "a pair of fields");
    if (in.extremal) fail(ErrorKind::InvalidArgument, "check chain needs compactly supported random fields");
    const int n = f.dim();
    const double p = ps.p, r = ps.r;
    const Resolution& res = in.spec.res;
    const GridPtr grid = res.directions(n);
    const ConstantBundle C = constants(ps);

    // level sets N_s of g at midpoint levels
    const int L = res.levels;
    const double ds = g.max_abs() / L;
    std::vector<ConvexBody> MN;
    double sum_MN = 0.0, sum_N = 0.0;
    for (int k = 0; k < L; ++k) {
        const CompactDomain D = CompactDomain::from_level(g, (k + 0.5) * ds, grid);
        const MomentBody Mk = moment_body(D, p);
        sum_N += ds * std::pow(domain_volume(D), (n + p) / n);
        sum_MN += ds * std::pow(Mk.body.volume(), p / n);
        MN.push_back(Mk.body);
    }
    const MomentBody Mg = moment_body(g, p, grid);

    Partial out;
    out.slack = kSlackFunction;
    const double bound = layer_bound(g, ps, out.extras);
    if (r > 1) {
        const double fq = lq_norm(f, ps.q());
        const double pre = std::pow(C.c1, r) * std::pow(fq, r);
        const double v = functional_mixed_volume(f, Mg.body, r);
        out.links = {
            {"V_r(f,M_pg)", v},
            {"c1^r |f|_q^r vol(M_pg)^(r/n)", pre * std::pow(Mg.body.volume(), r / n)},
            {"c1^r |f|_q^r (int vol(M_pN_s)^(p/n) ds)^(r/p)", pre * std::pow(sum_MN, r / p)},
            {"c1^r |f|_q^r (c int vol(N_s)^((n+p)/n) ds)^(r/p)", pre * std::pow(C.c_np * sum_N, r / p)},
            {"c1^r |f|_q^r (c a |g|_1^e1 |g|_l^-e2)^(r/p)", pre * std::pow(C.c_np * bound, r / p)},
        };
        out.lhs = n * v;
        out.rhs = n * out.links.back().value;
        return out;
    }

    // r = 1: f split into value bands, g into level sets
    const Field fg = f.is_grid() ? f : Field::grid(rasterize(f, res.nodes(n)));
    const GridField& gf = fg.as_grid();
    const auto grads = grid_gradients(gf);
    const double fmax = fg.max_abs();
    const int Lf = res.levels;
    const double dt = fmax / Lf;
    const double cell = gf.cell_volume();
    std::vector<double> phi(static_cast<std::size_t>(Lf) * L, 0.0);
    std::vector<double> hk(L);
    double pointwise = 0.0;
    for (std::size_t i = 0; i < gf.size(); ++i) {
        const Vec& d = grads[i];
        if (d.norm() == 0) continue;
        const int j = std::min(Lf - 1, static_cast<int>(gf.values[i] / dt));
        double inner = 0.0;
        for (int k = 0; k < L; ++k) {
            hk[k] = MN[k].support(-d);
            inner += ds * std::pow(hk[k], p);
            phi[static_cast<std::size_t>(j) * L + k] += hk[k] * cell;
        }
        pointwise += cell * std::pow(inner, 1 / p);
    }
    double minkowski_inner = 0.0;
    for (int j = 0; j < Lf; ++j) {
        double s = 0.0;
        for (int k = 0; k < L; ++k) s += ds * std::pow(phi[static_cast<std::size_t>(j) * L + k], p);
        minkowski_inner += std::pow(s, 1 / p);
    }
    double minkowski_outer = 0.0;
    for (int k = 0; k < L; ++k) {
        double s = 0.0;
        for (int j = 0; j < Lf; ++j) s += phi[static_cast<std::size_t>(j) * L + k];
        minkowski_outer += ds * std::pow(s, p);
    }
    std::vector<double> ts(Lf);
    for (int j = 0; j < Lf; ++j) ts[j] = (j + 0.5) * dt;
    const auto vols = level_volumes(fg, ts);
    double layer_f = 0.0;
    for (double v : vols) layer_f += dt * std::pow(v, (n - 1.0) / n);
    const double fq = lq_norm(fg, n / (n - 1.0));
    const double cp = std::pow(C.c_np, 1 / p);
    out.links = {
        {"(1/n) int_x (int_s h_{M_pN_s}(grad f)^p ds)^(1/p)", pointwise / n},
        {"(1/n) int_t (int_s (int_{S_t} h_{M_pN_s})^p ds)^(1/p)", minkowski_inner / n},
        {"(int_s (int_t V_1(N_t, M_pN_s) dt)^p ds)^(1/p)", std::pow(minkowski_outer, 1 / p) / n},
        {"int vol(N_t)^((n-1)/n) dt (int vol(M_pN_s)^(p/n) ds)^(1/p)", layer_f * std::pow(sum_MN, 1 / p)},
        {"c^(1/p) int vol(N_t)^((n-1)/n) dt (int vol(N_s)^((n+p)/n) ds)^(1/p)", cp * layer_f * std::pow(sum_N, 1 / p)},
        {"c^(1/p) |f|_(n/(n-1)) (a |g|_1^e1 |g|_l^-e2)^(1/p)", cp * fq * std::pow(bound, 1 / p)},
    };
    out.lhs = n * functional_mixed_volume(fg, Mg.body, 1.0);
    out.rhs = n * out.links.back().value;
    return out;
}

Partial check_remark(const Instance& in, const ParamSet& ps) {
    const Field& f = need(in.f, CheckId::Remark, "a pair of fields");
    const Field& g = need(in.g, CheckId::Remark, "a pair of fields");
    const int n = f.dim();
    const double p = ps.p;
    const GridPtr grid = in.spec.res.directions(n);
    const MomentBody Mg = moment_body(g, p, grid);
    const ConvexBody Pi = polar_projection_body_of_function(f, p, grid);
    Partial out;
    // both Fubini orders of int int g(y) |<grad f(x), y>|^p dy dx
    out.lhs = n * functional_mixed_volume(f, Mg.body, p);
    out.rhs = weighted_support_integral(g, Pi, p);
    out.slack = kSlackSet;
    out.band = around_one(1e-3);
    const double printed_lhs = out.lhs / n;
    const double printed_rhs = dual_mixed_volume(g, Pi, p);
    out.extras["printed_lhs"] = printed_lhs;
    out.extras["printed_rhs"] = printed_rhs;
    out.extras["ratio_literal"] = printed_lhs / printed_rhs;
    out.extras["ratio_support_reading"] = out.rhs / printed_lhs;
    return out;
}

Partial evaluate(CheckId id, const Instance& in, const ParamSet& ps) {
    switch (id) {
        case CheckId::Bp: return check_bp(in, ps);
        case CheckId::BpDomain: return check_bp_domain(in, ps);
        case CheckId::Bathtub: return check_bathtub(in, ps);
        case CheckId::Mixed: return check_mixed(in, ps);
        case CheckId::Pp: return check_pp(in, ps);
        case CheckId::Bmvm: return check_bmvm(in, ps);
        case CheckId::T1vmv: return check_t1vmv(in, ps);
        case CheckId::Taux: return check_taux(in, ps);
        case CheckId::Lnf: return check_lnf(in, ps);
        case CheckId::Lvnp: return check_lvnp(in, ps);
        case CheckId::Main: return check_main(in, ps);
        case CheckId::Chain: return check_chain(in, ps);
        case CheckId::Remark: return check_remark(in, ps);
    }
    fail(ErrorKind::InvalidArgument, "unknown check");
}

}  // namespace

DeficitReport check_instance(CheckId id, const Instance& inst, const ParamSet& ps, const CheckOptions& opt) {
    validate(ps);
    const auto start = std::chrono::steady_clock::now();
    Partial part = evaluate(id, inst, ps);
    DeficitReport rep;
    rep.id = id;
    rep.seed = inst.spec.seed;
    rep.params = ps;
    rep.lhs = part.lhs;
    rep.rhs = part.rhs;
    rep.deficit = part.lhs / part.rhs;
    rep.slack = opt.slack.value_or(part.slack);
    rep.pass = rep.deficit >= 1 - rep.slack;
    rep.band = part.band;
    if (rep.band) rep.in_band = rep.deficit >= rep.band->first && rep.deficit <= rep.band->second;
    rep.links = std::move(part.links);
    for (std::size_t k = 0; k + 1 < rep.links.size(); ++k)
        if (rep.links[k].value < rep.links[k + 1].value * (1 - kSlackChain)) rep.links_ordered = false;
    rep.instance = inst.descriptor;
    rep.resolution = inst.spec.res.to_json();
    rep.extras = std::move(part.extras);
    rep.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

DeficitReport check_inequality(CheckId id, const InstanceSpec& spec, const ParamSet& ps, const CheckOptions& opt) {
    DeficitReport rep = check_instance(id, random_instance(spec, ps), ps, opt);
    if (opt.doubling) {
        InstanceSpec fine = spec;
        fine.res = spec.res.doubled();
        rep.deficit_doubled = check_instance(id, random_instance(fine, ps), ps, {}).deficit;
    }
    return rep;
}

std::vector<DeficitReport> run_batch(CheckId id, const InstanceSpec& base, int count, const ParamSet& ps,
                                     const CheckOptions& opt) {
    std::vector<DeficitReport> out;
    for (int k = 0; k < count; ++k) {
        InstanceSpec spec = base;
        spec.seed = base.seed + static_cast<std::uint64_t>(k);
        try {
            out.push_back(check_inequality(id, spec, ps, opt));
        } catch (const std::exception& e) {
            DeficitReport rep;
            rep.id = id;
            rep.seed = spec.seed;
            rep.params = ps;
            rep.deficit = std::nan("");
            rep.slack = opt.slack.value_or(default_slack(id));
            rep.error = e.what();
            rep.instance = {{"generator", to_string(spec.kind)}, {"seed", spec.seed}, {"n", spec.n}};
            rep.resolution = spec.res.to_json();
            out.push_back(std::move(rep));
        }
    }
    return out;
}

std::vector<double> lambda_grid(int n, double p) {
    std::vector<double> out;
    const double lo = static_cast<double>(n) / (n + p) + 2 * kLambdaFloorGuard;
    const double hi = 1 - 2 * kLambdaGuard;
    for (int k = 0; k < 10; ++k) out.push_back(lo + (hi - lo) * k / 9.0);
    for (double l : {1.1, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0}) out.push_back(l);
    return out;
}

std::vector<DeficitReport> sweep(CheckId id, const InstanceSpec& base, int seeds, const ParamSet& ps,
                                 const std::vector<double>& lambdas, const CheckOptions& opt) {
    std::vector<DeficitReport> out;
    for (double l : lambdas) {
        ParamSet q = ps;
        q.lambda = l;
        validate(q);
        auto batch = run_batch(id, base, seeds, q, opt);
        out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    return out;
}

json to_json(const DeficitReport& r, bool timing) {
    json j = {{"id", to_string(r.id)}, {"seed", r.seed},       {"params", io::to_json(r.params)},
              {"lhs", r.lhs},          {"rhs", r.rhs},         {"deficit", r.deficit},
              {"slack", r.slack},      {"pass", r.pass},       {"instance", r.instance},
              {"resolution", r.resolution}};
    if (r.band) {
        j["band"] = {r.band->first, r.band->second};
        j["in_band"] = r.in_band;
    }
    if (!r.links.empty()) {
        json links = json::array();
        for (const ChainLink& l : r.links) links.push_back({{"name", l.name}, {"value", l.value}});
        j["links"] = links;
        j["links_ordered"] = r.links_ordered;
    }
    if (r.deficit_doubled) j["deficit_doubled"] = *r.deficit_doubled;
    if (!r.error.empty()) j["error"] = r.error;
    if (!r.extras.empty()) j["extras"] = r.extras;
    if (timing) j["time_ms"] = r.time_ms;
    return j;
}

void write_jsonl(std::ostream& os, const std::vector<DeficitReport>& reports, bool timing) {
    for (const DeficitReport& r : reports) os << to_json(r, timing).dump() << '\n';
}

void write_csv(std::ostream& os, const std::vector<DeficitReport>& reports, bool timing) {
    os << "id,seed,n,p,r,lambda,lhs,rhs,deficit,pass,time_ms\n";
    char buf[512];
    for (const DeficitReport& r : reports) {
        std::snprintf(buf, sizeof buf, "%s,%llu,%d,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%d,", to_string(r.id),
                      static_cast<unsigned long long>(r.seed), r.params.n, r.params.p, r.params.r, r.params.lambda,
                      r.lhs, r.rhs, r.deficit, r.ok() ? 1 : 0);
        os << buf;
        if (timing) {
            std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
            os << buf;
        }
        os << '\n';
    }
}

double monte_carlo_centroid_volume_square(std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = U(rng), y = U(rng);
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    const double N = static_cast<double>(samples);
    // h(xi)^2 = xi^T S xi / (c vol), vol = 1: an ellipse of area pi sqrt(det(S / c))
    const double c = c_np(2, 2.0);
    const double det = (sxx / N) * (syy / N) - (sxy / N) * (sxy / N);
    return kPi * std::sqrt(det) / c;
}

}  // namespace lpc
