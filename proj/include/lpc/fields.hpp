#pragma once

#include "lpc/geometry.hpp"
#include "lpc/params.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace lpc {

/// Named one-dimensional profile P on [0, inf).
struct Profile {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    std::vector<double> breaks;     // points where P or P' is not smooth
    double support_end = kInf;      // P vanishes beyond this radius
    bool monotone = true;           // nonincreasing
    bool continuous = true;
};

/// Profiles by name: "cone" (1-t)_+, "indicator" 1_[0,1], "bump" (1-t^2)_+^k,
/// "gaussian" exp(-t^2/(2 s^2)), "F_r" and "G" (extremals; need n, p, r, lambda).
Profile make_profile(const std::string& name, const nlohmann::json& params = nlohmann::json::object());
Profile extremal_F(const ParamSet& ps, FrExponent e = FrExponent::Decaying);
Profile extremal_G(const ParamSet& ps);

/// amplitude * P(t / stretch)
Profile rescaled(const Profile& P, double amplitude, double stretch);

/// Node-centred samples on a box; values[(i0 * N1 + i1) * N2 + i2], node at lo + i * h.
struct GridField {
    int n = 2;
    Vec lo;
    double h = 0.0;
    std::array<int, 3> shape{1, 1, 1};
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    std::size_t index(int i0, int i1, int i2 = 0) const {
        return (static_cast<std::size_t>(i0) * shape[1] + i1) * shape[2] + i2;
    }
    Vec point(std::size_t idx) const;
    double cell_volume() const { return std::pow(h, n); }
};

struct RadialField {
    Profile profile;
    ConvexBody gauge;
    double R = kInf;   // truncation radius

    double extent() const { return std::min(R, profile.support_end); }
};

class Field {
public:
    using Rep = std::variant<GridField, RadialField>;

    static Field grid(GridField g);
    static Field radial(Profile P, ConvexBody gauge, double R = kInf);

    int dim() const;
    const Rep& rep() const { return rep_; }
    bool is_grid() const { return std::holds_alternative<GridField>(rep_); }
    const GridField& as_grid() const { return std::get<GridField>(rep_); }
    const RadialField& as_radial() const { return std::get<RadialField>(rep_); }

    double value(const Vec& x) const;
    double max_abs() const;
    bool nonnegative() const;

private:
    explicit Field(Rep rep) : rep_(std::move(rep)) {}
    Rep rep_;
};

/// Throws invalid-argument unless f >= 0 everywhere.
void require_nonnegative(const Field& f);

/// Samples a field on an N^n grid whose box is 10% larger than its support.
GridField rasterize(const Field& f, int nodes_per_axis = 257);

double lq_norm(const Field& f, double q);
double level_volume(const Field& f, double t);
std::vector<double> level_volumes(const Field& f, const std::vector<double>& ts);

struct LayerOptions {
    int panels = 64;   // composite Gauss panels in t for grid fields
};
double layer_integral(const Field& f, double eta, const LayerOptions& opt = {});

struct GradientValue {
    Vec grad;
    bool kink = false;
};
GradientValue gradient_eval(const Field& f, const Vec& x);

/// Central-difference gradients at every node (one-sided on the box boundary).
std::vector<Vec> grid_gradients(const GridField& g);

kernels::SimplexSet grid_simplices(const GridField& g);

struct FunctionSurfaceMeasure {
    GridPtr grid;
    std::vector<double> weight;
};

FunctionSurfaceMeasure surface_measure_of_function(const Field& f, double r, GridPtr grid = nullptr);

struct Segment {
    Vec a, b;
};

/// Marching-squares polyline of {|f| = t} for a planar grid field.
std::vector<Segment> contour(const GridField& g, double t);

}  // namespace lpc
