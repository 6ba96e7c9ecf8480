#pragma once

#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"
#include "lpc/star_domain.hpp"

namespace lpc {

enum class MomentSource { Body, Domain, Field };
const char* to_string(MomentSource s) noexcept;

struct MomentBody {
    ConvexBody body;   // sampled support values
    MomentSource source;
    double p;
};

/// Moment body with h(xi)^p = int_source |<x, xi>|^p; sampled on `grid`
/// (the standard grid when null, the domain's own grid for domains).
MomentBody moment_body(const ConvexBody& K, double p, GridPtr grid = nullptr);
MomentBody moment_body(const CompactDomain& M, double p);
MomentBody moment_body(const Field& g, double p, GridPtr grid = nullptr);

MomentBody centroid_body(const ConvexBody& K, double p, GridPtr grid = nullptr);
MomentBody centroid_body(const CompactDomain& M, double p);

/// h(xi)^p at each node of `grid` for a convex source.
std::vector<double> body_moments(const ConvexBody& K, double p, const SphereGrid& grid);
/// h(xi)^p at each node of `grid` for a field source.
std::vector<double> field_moments(const Field& g, double p, const SphereGrid& grid);
/// h(xi)^p for arbitrary (not necessarily unit) directions; grid fields only.
std::vector<double> field_moments(const Field& g, double p, const std::vector<Vec>& dirs);

/// ((n+p) int_0^R t^{n+p-1} G(t) dt)^{1/p}
double radial_factor(const Profile& G, int n, double p, double R = kInf);
inline double radial_factor(const Profile& G, const ParamSet& ps, double R = kInf) {
    return radial_factor(G, ps.n, ps.p, R);
}

/// Share of int_0^inf t^{n+p-1} G(t) dt lying beyond R.
double radial_tail_fraction(const Profile& G, int n, double p, double R);

}  // namespace lpc
