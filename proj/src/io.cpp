#include "lpc/io.hpp"

#include <filesystem>
#include <fstream>

namespace lpc::io {

json to_json(const Vec& v) {
    json j = json::array();
    for (int i = 0; i < v.size(); ++i) j.push_back(v(i));
    return j;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array() || j.size() < 2 || j.size() > 3) fail(ErrorKind::InvalidArgument, "expected a 2- or 3-vector");
    Vec v(static_cast<int>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i)) = j[i].get<double>();
    return v;
}

json to_json(const Mat& A) {
    json j = json::array();
    for (int i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < A.cols(); ++k) row.push_back(A(i, k));
        j.push_back(row);
    }
    return j;
}

Mat mat_from_json(const json& j) {
    const int n = static_cast<int>(j.size());
    if (n < 2 || n > 3) fail(ErrorKind::InvalidArgument, "expected a 2x2 or 3x3 matrix");
    Mat A(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[i].size()) != n) fail(ErrorKind::InvalidArgument, "matrix must be square");
        for (int k = 0; k < n; ++k) A(i, k) = j[i][k].get<double>();
    }
    return A;
}

json to_json(const ParamSet& ps) { return {{"n", ps.n}, {"p", ps.p}, {"r", ps.r}, {"lambda", ps.lambda}}; }

json to_json(const ConstantBundle& c) {
    return {{"omega_n", c.omega_n}, {"c_np", c.c_np},   {"branch", to_string(c.branch)},
            {"A_or_B", c.A_or_B},   {"a", c.a},         {"c2", c.c2},
            {"c1", c.c1},           {"C_main", c.C_main}};
}

json to_json(const ConvexBody& K) {
    if (const auto* P = std::get_if<Polytope>(&K.rep())) {
        json v = json::array();
        for (const Vec& x : P->vertices) v.push_back(to_json(x));
        return {{"type", "polytope"}, {"n", K.dim()}, {"vertices", v}};
    }
    if (const auto* E = std::get_if<Ellipsoid>(&K.rep())) return {{"type", "ellipsoid"}, {"n", K.dim()}, {"A", to_json(E->A)}};
    const auto& S = std::get<SupportSampled>(K.rep());
    json j = {{"type", "sampled"}, {"n", K.dim()}, {"h", S.h}};
    if (K.dim() == 2) {
        j["nodes"] = S.grid->size();
    } else {
        j["n_theta"] = S.grid->n_theta();
        j["n_phi"] = S.grid->n_phi();
    }
    return j;
}

ConvexBody body_from_json(const json& j) {
    try {
        const std::string type = j.at("type").get<std::string>();
        const int n = j.value("n", 2);
        if (type == "polytope") {
            std::vector<Vec> pts;
            for (const auto& v : j.at("vertices")) pts.push_back(vec_from_json(v));
            return ConvexBody::polytope(pts);
        }
        if (type == "ellipsoid") return ConvexBody::ellipsoid(mat_from_json(j.at("A")));
        if (type == "ball") return ConvexBody::ball(n, j.value("radius", 1.0));
        if (type == "cube") return ConvexBody::cube(n, j.value("half", 1.0));
        if (type == "sampled") {
            const GridPtr grid = n == 2 ? SphereGrid::circle(j.at("nodes").get<int>())
                                        : SphereGrid::sphere(j.at("n_theta").get<int>(), j.at("n_phi").get<int>());
            return ConvexBody::sampled(grid, j.at("h").get<std::vector<double>>());
        }
        fail(ErrorKind::InvalidArgument, "unknown body type: " + type);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed body JSON: ") + e.what());
    }
}

ConvexBody parse_body(const std::string& arg, int n) {
    if (arg == "disk" || arg == "ball") return ConvexBody::ball(n);
    if (arg == "square" || arg == "cube") return ConvexBody::cube(n);
    if (!arg.empty() && arg.front() == '{') {
        json j = json::parse(arg, nullptr, false);
        if (j.is_discarded()) fail(ErrorKind::InvalidArgument, "malformed inline body JSON");
        return body_from_json(j);
    }
    if (!std::filesystem::exists(arg)) fail(ErrorKind::InvalidArgument, "no such body file: " + arg);
    std::ifstream in(arg);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::InvalidArgument, "malformed body file: " + arg);
    return body_from_json(j);
}

json to_json(const Profile& P) { return {{"name", P.name}, {"params", P.params}}; }

Profile profile_from_json(const json& j) {
    const std::string name = j.at("name").get<std::string>();
    const json params = j.value("params", json::object());
    if (name == "rescaled") {
        const Profile base = profile_from_json({{"name", params.at("base")}, {"params", params.value("base_params", json::object())}});
        return rescaled(base, params.at("amplitude").get<double>(), params.at("stretch").get<double>());
    }
    return make_profile(name, params);
}

json to_json(const Field& f) {
    if (f.is_grid()) {
        const GridField& g = f.as_grid();
        json shape = json::array();
        for (int a = 0; a < g.n; ++a) shape.push_back(g.shape[a]);
        return {{"type", "grid"}, {"n", g.n}, {"lo", to_json(g.lo)}, {"h", g.h}, {"shape", shape}};
    }
    const RadialField& r = f.as_radial();
    json j = {{"type", "radial"}, {"profile", to_json(r.profile)}, {"gauge", to_json(r.gauge)}};
    j["R"] = std::isfinite(r.R) ? json(r.R) : json("inf");
    return j;
}

Field field_from_json(const json& j) {
    if (j.at("type") != "radial") fail(ErrorKind::Unsupported, "only radial fields can be read back");
    double R = kInf;
    if (j.contains("R") && j["R"].is_number()) R = j["R"].get<double>();
    return Field::radial(profile_from_json(j.at("profile")), body_from_json(j.at("gauge")), R);
}

json to_json(const CompactDomain& M) {
    json rays = json::array();
    for (std::size_t i = 0; i < M.size(); ++i) {
        json ray = json::array();
        for (const Interval& iv : M.ray(i)) ray.push_back({iv.a, iv.b});
        rays.push_back(ray);
    }
    return {{"type", "domain"}, {"n", M.dim()}, {"nodes", M.size()}, {"rays", rays}};
}

json to_json(const MomentBody& m) {
    return {{"source", to_string(m.source)}, {"p", m.p}, {"volume", m.body.volume()}, {"body", to_json(m.body)}};
}

}  // namespace lpc::io
