#pragma once

#include "lpc/fields.hpp"
#include "lpc/geometry.hpp"
#include "lpc/star_domain.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace lpc {

enum class GeneratorKind { RandomPolygon, RandomEllipse, RandomDomain, RandomGridField, RadialProfileField, ExtremalPair };
const char* to_string(GeneratorKind k) noexcept;
GeneratorKind generator_from_string(const std::string& s);

using Rng = std::mt19937_64;

/// w (1 - |A^{-1}(x - c)|^2)_+^power
struct Bump {
    Vec center;
    Mat A;
    double weight = 1.0;
    double power = 3.0;
};

struct BumpMixture {
    int n = 2;
    std::vector<Bump> bumps;

    double value(const Vec& x) const;
    /// The mixture composed with T^{-1}.
    BumpMixture transformed(const Mat& T) const;
    /// Samples on a grid whose box is 10% larger than the support.
    Field sample(int nodes_per_axis) const;
};

ConvexBody random_polygon(Rng& rng);
ConvexBody random_polytope3(Rng& rng);
ConvexBody random_ellipsoid(Rng& rng, int n);
CompactDomain random_domain(Rng& rng, GridPtr grid);
/// Planar polygon star-shaped about the origin, vertices counter-clockwise.
std::vector<Vec> random_star_polygon(Rng& rng);
BumpMixture random_bumps(Rng& rng, int n);
/// Smooth radial profile (bump of random power and height) in a random gauge.
Field random_radial_field(Rng& rng, int n);
/// Random linear map with |det| = 1.
Mat random_sl(Rng& rng, int n);
Mat random_rotation(Rng& rng, int n);

}  // namespace lpc
