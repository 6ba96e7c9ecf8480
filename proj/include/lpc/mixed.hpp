#pragma once

#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"

#include <string>
#include <vector>

namespace lpc {

/// Atom of the L_r surface area measure: facet normal and area * h_K(normal)^{1-r}.
struct SurfaceAtom {
    Vec normal;
    double weight = 0.0;
};

/// Atoms for polytopes and for sampled planar bodies (via the circumscribed polygon).
std::vector<SurfaceAtom> surface_atoms(const ConvexBody& K, double r);

enum class MixedPath { Atomic, Curvature, LinearImage, FiniteDifference };
const char* to_string(MixedPath p) noexcept;

struct MixedVolumeOptions {
    bool cross_check = true;
    double cross_tol = 1e-2;
    double cross_tol_3d = 1e-1;   // sphere-grid differences are first order (up to ~5e-2 at 64x128)
    GridPtr fd_grid;   // finite-difference grid; chosen automatically when null
};

struct MixedVolumeReport {
    double value = 0.0;
    MixedPath path = MixedPath::Atomic;
    double fallback = 0.0;   // finite-difference value (0 if not computed)
    double rel_diff = 0.0;
    bool cross_checked = false;
};

/// V_r(K, L) by the best available path, cross-checked against finite differences.
MixedVolumeReport mixed_volume_report(const ConvexBody& K, const ConvexBody& L, double r,
                                      const MixedVolumeOptions& opt = {});
double mixed_volume_r(const ConvexBody& K, const ConvexBody& L, double r, const MixedVolumeOptions& opt = {});

/// (r/n) d/de vol(K +_r e L) at e = 0, Richardson-extrapolated from e = 1e-3, 5e-4.
double mixed_volume_fd(const ConvexBody& K, const ConvexBody& L, double r, GridPtr grid = nullptr);

/// (1/n) int h_K(-grad f)^r dx
double functional_mixed_volume(const Field& f, const ConvexBody& K, double r);

struct LevelMixedResult {
    double value = 0.0;
    bool irregular = false;   // vanishing gradient met on the contour
};

/// (1/n) int_{f = t} h_Q(nu)^r |grad f|^{r-1} dS with nu = -grad f / |grad f|.
LevelMixedResult level_mixed_volume(const Field& f, double t, const ConvexBody& Q, double r);

/// int ||x||_L^p g(x) dx
double dual_mixed_volume(const Field& g, const ConvexBody& L, double p);

/// Body with h(xi)^p = int |<grad f, xi>|^p dx, sampled on `grid`.
ConvexBody polar_projection_body_of_function(const Field& f, double p, GridPtr grid = nullptr);
std::vector<double> polar_projection_moments(const Field& f, double p, const SphereGrid& grid);
/// h(xi)^p at arbitrary directions; grid fields only.
std::vector<double> polar_projection_moments(const Field& f, double p, const std::vector<Vec>& dirs);

/// Planar star-shaped polygon (vertices counter-clockwise around the origin).
double polygon_area(const std::vector<Vec>& vertices);
/// V_1(M, K) = (1/2) sum over edges of |e| h_K(outer normal).
double polygon_mixed_volume_1(const std::vector<Vec>& vertices, const ConvexBody& K);

}  // namespace lpc
