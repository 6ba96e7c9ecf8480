#include "lpc/fields.hpp"

#include "lpc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace lpc {

namespace {

double param(const nlohmann::json& j, const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

ParamSet params_from(const nlohmann::json& j) {
    for (const char* key : {"n", "p", "r", "lambda"})
        if (!j.contains(key)) fail(ErrorKind::InvalidArgument, std::string("profile parameter missing: ") + key);
    return make_params(j.at("n").get<int>(), j.at("p").get<double>(), j.at("r").get<double>(),
                       j.at("lambda").get<double>());
}

// Central differences at an interior node, one-sided on the box boundary.
Vec node_gradient(const GridField& g, std::array<int, 3> idx) {
    Vec grad = Vec::Zero(g.n);
    for (int a = 0; a < g.n; ++a) {
        auto lo = idx, hi = idx;
        double span = 2 * g.h;
        if (idx[a] == 0) {
            span = g.h;
            hi[a] += 1;
        } else if (idx[a] == g.shape[a] - 1) {
            span = g.h;
            lo[a] -= 1;
        } else {
            lo[a] -= 1;
            hi[a] += 1;
        }
        grad(a) = (g.values[g.index(hi[0], hi[1], hi[2])] - g.values[g.index(lo[0], lo[1], lo[2])]) / span;
    }
    return grad;
}

// Cell containing x and the fractional offsets; false if x is outside the box.
bool locate(const GridField& g, const Vec& x, std::array<int, 3>& cell, std::array<double, 3>& frac) {
    cell = {0, 0, 0};
    frac = {0, 0, 0};
    for (int a = 0; a < g.n; ++a) {
        const double s = (x(a) - g.lo(a)) / g.h;
        if (!(s >= 0) || s > g.shape[a] - 1) return false;
        int c = static_cast<int>(std::floor(s));
        c = std::min(c, g.shape[a] - 2);
        cell[a] = c;
        frac[a] = s - c;
    }
    return true;
}

template <class F>
void for_corners(const GridField& g, const std::array<int, 3>& cell, const std::array<double, 3>& frac, F&& f) {
    const int corners = 1 << g.n;
    for (int c = 0; c < corners; ++c) {
        std::array<int, 3> idx = cell;
        double w = 1.0;
        for (int a = 0; a < g.n; ++a) {
            const int bit = (c >> a) & 1;
            idx[a] += bit;
            w *= bit ? frac[a] : 1 - frac[a];
        }
        f(idx, w);
    }
}

double box_half_width(const RadialField& rf) {
    const double E = rf.extent();
    if (!std::isfinite(E)) fail(ErrorKind::InvalidArgument, "radial field without finite support cannot be sampled");
    const int n = rf.gauge.dim();
    double w = 0.0;
    for (int a = 0; a < n; ++a) {
        Vec e = Vec::Zero(n);
        e(a) = 1;
        w = std::max({w, rf.gauge.support(e), rf.gauge.support(-e)});
    }
    return 1.1 * E * w;
}

double radial_max_abs(const RadialField& rf) {
    const Profile& P = rf.profile;
    if (P.monotone) return std::abs(P.value(0.0));
    const double E = rf.extent();
    if (!std::isfinite(E)) fail(ErrorKind::Unsupported, "non-monotone profile needs finite support");
    double m = 0.0;
    for (int i = 0; i <= 4096; ++i) m = std::max(m, std::abs(P.value(E * i / 4096.0)));
    return m;
}

// Radii where |P| >= t along a ray, as intervals within [0, extent].
std::vector<std::pair<double, double>> radial_superlevel(const RadialField& rf, double t) {
    const Profile& P = rf.profile;
    const double E = rf.extent();
    auto above = [&](double s) { return std::abs(P.value(s)) >= t; };
    auto bisect = [&](double lo, double hi) {
        // above(lo) differs from above(hi); returns the transition point
        const bool left = above(lo);
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            (above(mid) == left ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    std::vector<std::pair<double, double>> out;
    if (P.monotone) {
        if (!above(0.0)) return out;
        if (std::isfinite(E) && above(E)) {
            out.push_back({0.0, E});
            return out;
        }
        double hi = std::isfinite(E) ? E : 1.0;
        while (above(hi)) {
            hi *= 2;
            if (hi > 1e12) fail(ErrorKind::NumericFailure, "level set radius does not stay bounded");
        }
        out.push_back({0.0, bisect(0.0, hi)});
        return out;
    }
    if (!std::isfinite(E)) fail(ErrorKind::Unsupported, "non-monotone profile needs finite support");
    constexpr int samples = 4096;
    bool inside = above(0.0);
    double start = 0.0, prev = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double s = E * i / samples;
        const bool now = above(s);
        if (now != inside) {
            const double cut = bisect(prev, s);
            if (inside) out.push_back({start, cut});
            else start = cut;
            inside = now;
        }
        prev = s;
    }
    if (inside) out.push_back({start, E});
    return out;
}

double radial_level_volume(const RadialField& rf, double t) {
    const int n = rf.gauge.dim();
    double mass = 0.0;
    for (auto [a, b] : radial_superlevel(rf, t)) mass += std::pow(b, n) - std::pow(a, n);
    return rf.gauge.volume() * mass;
}

FunctionSurfaceMeasure bin_gradients(int n, GridPtr grid, double r, std::size_t count,
                                     const std::function<std::pair<Vec, double>(std::size_t)>& sample) {
    if (!grid) grid = SphereGrid::standard(n);
    if (grid->dim() != n) fail(ErrorKind::InvalidArgument, "sphere grid dimension mismatch");
    FunctionSurfaceMeasure m{grid, std::vector<double>(grid->size(), 0.0)};
    bool any = false;
    for (std::size_t i = 0; i < count; ++i) {
        auto [grad, cell] = sample(i);
        const double len = grad.norm();
        if (!(len > 0)) continue;
        any = true;
        m.weight[grid->nearest(-grad / len)] += std::pow(len, r) * cell;
    }
    if (!any) fail(ErrorKind::DegenerateField, "all gradients vanish");
    return m;
}

}  // namespace

Profile make_profile(const std::string& name, const nlohmann::json& params) {
    Profile P;
    P.name = name;
    P.params = params.is_null() ? nlohmann::json::object() : params;
    if (name == "cone") {
        P.value = [](double t) { return t < 1 ? 1 - t : 0.0; };
        P.derivative = [](double t) { return t < 1 ? -1.0 : 0.0; };
        P.breaks = {1.0};
        P.support_end = 1.0;
    } else if (name == "indicator") {
        P.value = [](double t) { return t <= 1 ? 1.0 : 0.0; };
        P.derivative = [](double) { return 0.0; };
        P.breaks = {1.0};
        P.support_end = 1.0;
        P.continuous = false;
    } else if (name == "bump") {
        const double k = param(P.params, "k", 3.0);
        if (!(k >= 1)) fail(ErrorKind::InvalidArgument, "bump power must be >= 1");
        P.value = [k](double t) { return t < 1 ? std::pow(1 - t * t, k) : 0.0; };
        P.derivative = [k](double t) { return t < 1 ? -2 * k * t * std::pow(1 - t * t, k - 1) : 0.0; };
        P.breaks = {1.0};
        P.support_end = 1.0;
    } else if (name == "gaussian") {
        const double s = param(P.params, "s", 1.0);
        if (!(s > 0)) fail(ErrorKind::InvalidArgument, "gaussian width must be positive");
        P.value = [s](double t) { return std::exp(-t * t / (2 * s * s)); };
        P.derivative = [s](double t) { return -t / (s * s) * std::exp(-t * t / (2 * s * s)); };
    } else if (name == "F_r") {
        const std::string ex = P.params.value("exponent", std::string("decaying"));
        if (ex != "decaying" && ex != "printed") fail(ErrorKind::InvalidArgument, "exponent must be decaying or printed");
        return extremal_F(params_from(P.params), ex == "printed" ? FrExponent::Printed : FrExponent::Decaying);
    } else if (name == "G") {
        return extremal_G(params_from(P.params));
    } else {
        fail(ErrorKind::InvalidArgument, "unknown profile: " + name);
    }
    return P;
}

Profile extremal_F(const ParamSet& ps, FrExponent e) {
    validate(ps);
    if (ps.r == 1.0) fail(ErrorKind::Unsupported, "F_r is undefined at r = 1");
    Profile P;
    P.name = "F_r";
    P.params = {{"n", ps.n}, {"p", ps.p}, {"r", ps.r}, {"lambda", ps.lambda},
                {"exponent", e == FrExponent::Printed ? "printed" : "decaying"}};
    P.value = [ps, e](double t) { return extremal_profile(ProfileKind::F_r, ps, t, e); };
    P.derivative = [ps, e](double t) { return extremal_derivative(ProfileKind::F_r, ps, t, e); };
    P.monotone = fr_exponent(ps.n, ps.r, e) <= 0;
    return P;
}

Profile extremal_G(const ParamSet& ps) {
    validate(ps);
    Profile P;
    P.name = "G";
    P.params = {{"n", ps.n}, {"p", ps.p}, {"r", ps.r}, {"lambda", ps.lambda}};
    P.value = [ps](double t) { return extremal_profile(ProfileKind::G_pl, ps, t); };
    P.derivative = [ps](double t) { return extremal_derivative(ProfileKind::G_pl, ps, t); };
    if (ps.lambda > 1) {
        P.breaks = {1.0};
        P.support_end = 1.0;
    }
    return P;
}

Profile rescaled(const Profile& P, double amplitude, double stretch) {
    if (!(stretch > 0)) fail(ErrorKind::InvalidArgument, "stretch must be positive");
    Profile Q = P;
    Q.params = {{"base", P.name}, {"base_params", P.params}, {"amplitude", amplitude}, {"stretch", stretch}};
    Q.name = "rescaled";
    auto v = P.value;
    auto d = P.derivative;
    Q.value = [v, amplitude, stretch](double t) { return amplitude * v(t / stretch); };
    Q.derivative = [d, amplitude, stretch](double t) { return amplitude / stretch * d(t / stretch); };
    for (double& b : Q.breaks) b *= stretch;
    Q.support_end = P.support_end * stretch;
    return Q;
}

Vec GridField::point(std::size_t idx) const {
    Vec x(n);
    std::size_t rest = idx;
    for (int a = n - 1; a >= 0; --a) {
        const std::size_t N = static_cast<std::size_t>(shape[a]);
        x(a) = lo(a) + static_cast<double>(rest % N) * h;
        rest /= N;
    }
    return x;
}

Field Field::grid(GridField g) {
    if (g.n != 2 && g.n != 3) fail(ErrorKind::InvalidArgument, "grid fields need n = 2 or 3");
    if (g.n == 2) g.shape[2] = 1;
    if (static_cast<int>(g.lo.size()) != g.n) fail(ErrorKind::InvalidArgument, "box corner has wrong dimension");
    if (!(g.h > 0)) fail(ErrorKind::InvalidArgument, "grid spacing must be positive");
    std::size_t total = 1;
    for (int a = 0; a < g.n; ++a) {
        if (g.shape[a] < 3) fail(ErrorKind::InvalidArgument, "grid needs at least 3 nodes per axis");
        total *= static_cast<std::size_t>(g.shape[a]);
    }
    if (g.values.size() != total) fail(ErrorKind::InvalidArgument, "grid value count does not match shape");
    double m = 0.0;
    for (double v : g.values) {
        if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, "grid values must be finite");
        m = std::max(m, std::abs(v));
    }
    const double tol = 1e-12 * m;
    for (int i0 = 0; i0 < g.shape[0]; ++i0)
        for (int i1 = 0; i1 < g.shape[1]; ++i1)
            for (int i2 = 0; i2 < g.shape[2]; ++i2) {
                const bool edge = i0 == 0 || i0 == g.shape[0] - 1 || i1 == 0 || i1 == g.shape[1] - 1 ||
                                  (g.n == 3 && (i2 == 0 || i2 == g.shape[2] - 1));
                if (edge && std::abs(g.values[g.index(i0, i1, i2)]) > tol)
                    fail(ErrorKind::InvalidArgument, "grid field must vanish on the box boundary");
            }
    return Field(Rep(std::move(g)));
}

Field Field::radial(Profile P, ConvexBody gauge, double R) {
    if (!P.value || !P.derivative) fail(ErrorKind::InvalidArgument, "profile needs value and derivative");
    if (!(R > 0)) fail(ErrorKind::InvalidArgument, "truncation radius must be positive");
    return Field(Rep(RadialField{std::move(P), std::move(gauge), R}));
}

int Field::dim() const {
    return is_grid() ? as_grid().n : as_radial().gauge.dim();
}

double Field::value(const Vec& x) const {
    if (is_grid()) {
        const GridField& g = as_grid();
        std::array<int, 3> cell;
        std::array<double, 3> frac;
        if (!locate(g, x, cell, frac)) return 0.0;
        double v = 0.0;
        for_corners(g, cell, frac, [&](const std::array<int, 3>& idx, double w) {
            v += w * g.values[g.index(idx[0], idx[1], idx[2])];
        });
        return v;
    }
    const RadialField& rf = as_radial();
    const double t = rf.gauge.gauge(x);
    return t > rf.R ? 0.0 : rf.profile.value(t);
}

double Field::max_abs() const {
    if (is_grid()) {
        double m = 0.0;
        for (double v : as_grid().values) m = std::max(m, std::abs(v));
        return m;
    }
    return radial_max_abs(as_radial());
}

bool Field::nonnegative() const {
    if (is_grid()) {
        const auto& v = as_grid().values;
        return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0; });
    }
    const RadialField& rf = as_radial();
    const Profile& P = rf.profile;
    const double E = std::isfinite(rf.extent()) ? rf.extent() : 1e3;
    for (int i = 0; i <= 4096; ++i)
        if (P.value(E * i / 4096.0) < 0) return false;
    return true;
}

void require_nonnegative(const Field& f) {
    if (!f.nonnegative()) fail(ErrorKind::InvalidArgument, "field must be nonnegative");
}

GridField rasterize(const Field& f, int nodes_per_axis) {
    if (f.is_grid()) return f.as_grid();
    if (nodes_per_axis < 3) fail(ErrorKind::InvalidArgument, "need at least 3 nodes per axis");
    const RadialField& rf = f.as_radial();
    const int n = rf.gauge.dim();
    const double W = box_half_width(rf);
    GridField g;
    g.n = n;
    g.lo = Vec::Constant(n, -W);
    g.h = 2 * W / (nodes_per_axis - 1);
    g.shape = {nodes_per_axis, nodes_per_axis, n == 3 ? nodes_per_axis : 1};
    std::size_t total = 1;
    for (int a = 0; a < n; ++a) total *= static_cast<std::size_t>(nodes_per_axis);
    g.values.resize(total);
    for (std::size_t i = 0; i < total; ++i) g.values[i] = f.value(g.point(i));
    return g;
}

double lq_norm(const Field& f, double q) {
    if (!(q > 0)) fail(ErrorKind::InvalidArgument, "q must be positive");
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        double s = 0.0;
        for (double v : g.values) s += std::pow(std::abs(v), q);
        return std::pow(s * g.cell_volume(), 1 / q);
    }
    const RadialField& rf = f.as_radial();
    const int n = rf.gauge.dim();
    const Profile& P = rf.profile;
    const double I = quad::radial([&](double t) { return std::pow(std::abs(P.value(t)), q) * std::pow(t, n - 1); },
                                  P.breaks, rf.extent());
    return std::pow(n * rf.gauge.volume() * I, 1 / q);
}

kernels::SimplexSet grid_simplices(const GridField& g) {
    kernels::SimplexSet s;
    s.n = g.n;
    auto val = [&](int i, int j, int k) { return std::abs(g.values[g.index(i, j, k)]); };
    if (g.n == 2) {
        s.measure = g.h * g.h / 2;
        for (int i = 0; i + 1 < g.shape[0]; ++i)
            for (int j = 0; j + 1 < g.shape[1]; ++j) {
                const double a = val(i, j, 0), b = val(i + 1, j, 0), c = val(i + 1, j + 1, 0), d = val(i, j + 1, 0);
                for (auto tri : {std::array<double, 3>{a, b, c}, std::array<double, 3>{a, d, c}}) {
                    if (tri[0] == 0 && tri[1] == 0 && tri[2] == 0) continue;
                    std::sort(tri.begin(), tri.end());
                    s.v0.push_back(tri[0]);
                    s.v1.push_back(tri[1]);
                    s.v2.push_back(tri[2]);
                }
            }
        return s;
    }
    s.measure = g.h * g.h * g.h / 6;
    static const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int i = 0; i + 1 < g.shape[0]; ++i)
        for (int j = 0; j + 1 < g.shape[1]; ++j)
            for (int k = 0; k + 1 < g.shape[2]; ++k) {
                bool any = false;
                for (int c = 0; c < 8 && !any; ++c) any = val(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)) != 0;
                if (!any) continue;
                for (const auto& pm : perms) {
                    std::array<int, 3> at{i, j, k};
                    std::array<double, 4> tet;
                    tet[0] = val(at[0], at[1], at[2]);
                    for (int step = 0; step < 3; ++step) {
                        at[pm[step]] += 1;
                        tet[step + 1] = val(at[0], at[1], at[2]);
                    }
                    std::sort(tet.begin(), tet.end());
                    s.v0.push_back(tet[0]);
                    s.v1.push_back(tet[1]);
                    s.v2.push_back(tet[2]);
                    s.v3.push_back(tet[3]);
                }
            }
    return s;
}

std::vector<double> level_volumes(const Field& f, const std::vector<double>& ts) {
    for (double t : ts)
        if (!(t > 0)) fail(ErrorKind::InvalidArgument, "level threshold must be positive");
    std::vector<double> out(ts.size(), 0.0);
    if (f.is_grid()) {
        const auto s = grid_simplices(f.as_grid());
        kernels::superlevel_measure(s, ts, out);
        return out;
    }
    for (std::size_t k = 0; k < ts.size(); ++k) out[k] = radial_level_volume(f.as_radial(), ts[k]);
    return out;
}

double level_volume(const Field& f, double t) { return level_volumes(f, {t})[0]; }

double layer_integral(const Field& f, double eta, const LayerOptions& opt) {
    if (!(eta > 0)) fail(ErrorKind::InvalidArgument, "eta must be positive");
    if (!f.is_grid()) {
        const RadialField& rf = f.as_radial();
        const Profile& P = rf.profile;
        if (P.monotone && P.continuous) {
            const int n = rf.gauge.dim();
            const double vK = rf.gauge.volume();
            const double E = rf.extent();
            double total = quad::radial(
                [&](double s) { return std::pow(vK * std::pow(s, n), eta) * std::abs(P.derivative(s)); }, P.breaks, E);
            if (std::isfinite(E)) total += std::abs(P.value(E)) * std::pow(vK * std::pow(E, n), eta);
            return total;
        }
    }
    const double top = f.max_abs();
    if (!(top > 0)) return 0.0;
    const auto& rule = quad::gauss_legendre(8);
    std::vector<double> ts, ws;
    const double width = top / opt.panels;
    for (int k = 0; k < opt.panels; ++k)
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            ts.push_back((k + 0.5) * width + 0.5 * width * rule.nodes[i]);
            ws.push_back(0.5 * width * rule.weights[i]);
        }
    const auto vols = level_volumes(f, ts);
    double total = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) total += ws[i] * std::pow(vols[i], eta);
    return total;
}

std::vector<Vec> grid_gradients(const GridField& g) {
    std::vector<Vec> out(g.size());
    for (int i0 = 0; i0 < g.shape[0]; ++i0)
        for (int i1 = 0; i1 < g.shape[1]; ++i1)
            for (int i2 = 0; i2 < g.shape[2]; ++i2) out[g.index(i0, i1, i2)] = node_gradient(g, {i0, i1, i2});
    return out;
}

GradientValue gradient_eval(const Field& f, const Vec& x) {
    GradientValue out;
    const int n = f.dim();
    if (x.size() != n) fail(ErrorKind::InvalidArgument, "point has wrong dimension");
    out.grad = Vec::Zero(n);
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        std::array<int, 3> cell;
        std::array<double, 3> frac;
        if (!locate(g, x, cell, frac)) return out;
        for_corners(g, cell, frac, [&](const std::array<int, 3>& idx, double w) {
            if (w != 0) out.grad += w * node_gradient(g, idx);
        });
        return out;
    }
    const RadialField& rf = f.as_radial();
    const double t = rf.gauge.gauge(x);
    if (t > rf.extent()) return out;
    const double dP = rf.profile.derivative(t);
    const GaugeGradient gg = rf.gauge.gauge_gradient(x);
    if (t == 0) {
        out.kink = dP != 0;
        return out;
    }
    out.grad = dP * gg.grad;
    out.kink = gg.kink;
    return out;
}

FunctionSurfaceMeasure surface_measure_of_function(const Field& f, double r, GridPtr grid) {
    if (!(r >= 1)) fail(ErrorKind::InvalidArgument, "r must be >= 1");
    const int n = f.dim();
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        const double cell = g.cell_volume();
        return bin_gradients(n, grid, r, g.size(), [&](std::size_t i) {
            std::array<int, 3> idx{};
            std::size_t rest = i;
            for (int a = 2; a >= 0; --a) {
                idx[a] = static_cast<int>(rest % static_cast<std::size_t>(g.shape[a]));
                rest /= static_cast<std::size_t>(g.shape[a]);
            }
            return std::pair<Vec, double>{node_gradient(g, idx), cell};
        });
    }
    const GridField raster = rasterize(f, n == 2 ? 513 : 97);
    const double cell = raster.cell_volume();
    return bin_gradients(n, grid, r, raster.size(), [&](std::size_t i) {
        return std::pair<Vec, double>{gradient_eval(f, raster.point(i)).grad, cell};
    });
}

std::vector<Segment> contour(const GridField& g, double t) {
    if (g.n != 2) fail(ErrorKind::Unsupported, "contours are extracted for planar fields only");
    std::vector<Segment> out;
    auto val = [&](int i, int j) { return std::abs(g.values[g.index(i, j, 0)]); };
    auto pt = [&](int i, int j) { return vec2(g.lo(0) + i * g.h, g.lo(1) + j * g.h); };
    for (int i = 0; i + 1 < g.shape[0]; ++i)
        for (int j = 0; j + 1 < g.shape[1]; ++j) {
            const std::array<std::array<int, 2>, 4> c{{{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}}};
            std::array<double, 4> v;
            std::array<bool, 4> in;
            int count = 0;
            for (int k = 0; k < 4; ++k) {
                v[k] = val(c[k][0], c[k][1]);
                in[k] = v[k] >= t;
                count += in[k];
            }
            if (count == 0 || count == 4) continue;
            std::array<Vec, 4> cross;
            std::array<bool, 4> has{};
            for (int e = 0; e < 4; ++e) {
                const int a = e, b = (e + 1) % 4;
                if (in[a] == in[b]) continue;
                const double s = (t - v[a]) / (v[b] - v[a]);
                cross[e] = pt(c[a][0], c[a][1]) + s * (pt(c[b][0], c[b][1]) - pt(c[a][0], c[a][1]));
                has[e] = true;
            }
            if (has[0] + has[1] + has[2] + has[3] == 2) {
                std::array<int, 2> e{};
                int m = 0;
                for (int k = 0; k < 4; ++k)
                    if (has[k]) e[m++] = k;
                out.push_back({cross[e[0]], cross[e[1]]});
                continue;
            }
            // saddle: decide by the cell centre
            const bool centre = 0.25 * (v[0] + v[1] + v[2] + v[3]) >= t;
            const bool cut_even = in[0] != centre;   // isolate corners 0 and 2
            if (cut_even) {
                out.push_back({cross[3], cross[0]});
                out.push_back({cross[1], cross[2]});
            } else {
                out.push_back({cross[0], cross[1]});
                out.push_back({cross[2], cross[3]});
            }
        }
    return out;
}

}  // namespace lpc
