#pragma once

#include "lpc/core.hpp"

#include <functional>
#include <string>

namespace lpc {

/// Scalar parameters (n, p, r, lambda); q is always derived.
struct ParamSet {
    int n = 2;
    double p = 1.0;
    double r = 1.0;
    double lambda = 2.0;

    double q() const { return n * r / (n - r); }
};

inline constexpr double kLambdaGuard = 0.05;
inline constexpr double kLambdaFloorGuard = 0.01;

/// Checks every constraint on a ParamSet; throws invalid-argument otherwise.
void validate(const ParamSet& ps);
ParamSet make_params(int n, double p, double r, double lambda);

enum class GammaImpl { Boost, Std };

double log_gamma(double x, GammaImpl impl = GammaImpl::Boost);

/// Volume of the unit ball in R^m; m may be any real >= 0.
double omega(double m, GammaImpl impl = GammaImpl::Boost);

double c_np(int n, double p, GammaImpl impl = GammaImpl::Boost);
inline double c_np(const ParamSet& ps) { return c_np(ps.n, ps.p); }

enum class Branch { LambdaAbove1, LambdaBelow1 };
const char* to_string(Branch b) noexcept;

struct LayerConstant {
    Branch branch;
    double A_or_B;
    double a;
};

LayerConstant layer_constant(const ParamSet& ps, GammaImpl impl = GammaImpl::Boost);

/// Signed exponents of ||g||_1 and ||g||_lambda^{-1} in the layer-cake bound.
struct LayerExponents {
    double e1;   // ((n+p)(l-1)+p)/((l-1)n)
    double e2;   // l p/((l-1)n)
};
LayerExponents layer_exponents(const ParamSet& ps);

double c2(const ParamSet& ps, GammaImpl impl = GammaImpl::Boost);

enum class FrExponent { Decaying, Printed };

/// Exponent of F_r: 1 - n/r (decaying) or the printed 1 - r/n.
double fr_exponent(int n, double r, FrExponent e = FrExponent::Decaying);

/// Sharp constant of V_r(f,K) >= c1^r ||f||_q^r vol(K)^{r/n}, from the equality case.
double c1(const ParamSet& ps);

/// c1^r = V_r(f,B) / (||f||_q^r vol(B)^{r/n}) for f = P(|x|), integrated on x = log t.
double sobolev_ratio(const std::function<double(double)>& P, const std::function<double(double)>& dP, int n,
                     double r, double x_lo = -40.0, double x_hi = 40.0, int nodes = 4000);

double c_main(const ParamSet& ps);

struct ConstantBundle {
    double omega_n;
    double c_np;
    Branch branch;
    double A_or_B;
    double a;
    double c2;
    double c1;
    double C_main;
};

ConstantBundle constants(const ParamSet& ps, GammaImpl impl = GammaImpl::Boost);

enum class ProfileKind { F_r, G_pl };

double extremal_profile(ProfileKind kind, const ParamSet& ps, double t, FrExponent e = FrExponent::Decaying);
double extremal_derivative(ProfileKind kind, const ParamSet& ps, double t, FrExponent e = FrExponent::Decaying);

struct SminResult {
    double s_star;
    double value;
};

/// Minimizer and minimum of a s^{-alpha} + b s^{beta} over s > 0.
SminResult smin(double a, double b, double alpha, double beta);

}  // namespace lpc
