#include "lpc/params.hpp"

#include "lpc/quadrature.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace lpc {

namespace {

std::string describe(const ParamSet& ps) {
    std::ostringstream os;
    os << "(n=" << ps.n << ", p=" << ps.p << ", r=" << ps.r << ", lambda=" << ps.lambda << ")";
    return os.str();
}

double softplus(double y) { return y > 0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y)); }

}  // namespace

void validate(const ParamSet& ps) {
    if (ps.n < 2) fail(ErrorKind::InvalidArgument, "n must be >= 2 " + describe(ps));
    if (!(ps.p >= 1.0) || !std::isfinite(ps.p)) fail(ErrorKind::InvalidArgument, "p must be >= 1 " + describe(ps));
    if (!(ps.r >= 1.0) || !(ps.r < ps.n)) fail(ErrorKind::InvalidArgument, "r must lie in [1, n) " + describe(ps));
    if (!std::isfinite(ps.lambda) || std::abs(ps.lambda - 1.0) < kLambdaGuard)
        fail(ErrorKind::InvalidArgument, "lambda too close to 1 " + describe(ps));
    if (ps.lambda < static_cast<double>(ps.n) / (ps.n + ps.p) + kLambdaFloorGuard)
        fail(ErrorKind::InvalidArgument, "lambda must exceed n/(n+p) + 0.01 " + describe(ps));
}

ParamSet make_params(int n, double p, double r, double lambda) {
    ParamSet ps{n, p, r, lambda};
    validate(ps);
    return ps;
}

double log_gamma(double x, GammaImpl impl) {
    if (!(x > 0)) fail(ErrorKind::InvalidArgument, "log_gamma needs a positive argument");
    return impl == GammaImpl::Boost ? boost::math::lgamma(x) : std::lgamma(x);
}

double omega(double m, GammaImpl impl) {
    if (!(m >= 0)) fail(ErrorKind::InvalidArgument, "omega: dimension must be >= 0");
    return std::exp(0.5 * m * std::log(kPi) - log_gamma(0.5 * m + 1.0, impl));
}

double c_np(int n, double p, GammaImpl impl) {
    return omega(n + p, impl) / (omega(2, impl) * omega(n, impl) * omega(p - 1.0, impl));
}

const char* to_string(Branch b) noexcept { return b == Branch::LambdaAbove1 ? "lambda>1" : "lambda<1"; }

LayerExponents layer_exponents(const ParamSet& ps) {
    const double n = ps.n, p = ps.p, l = ps.lambda;
    return {((n + p) * (l - 1) + p) / ((l - 1) * n), l * p / ((l - 1) * n)};
}

LayerConstant layer_constant(const ParamSet& ps, GammaImpl impl) {
    validate(ps);
    const double n = ps.n, p = ps.p, l = ps.lambda;
    auto lg = [impl](double x) { return log_gamma(x, impl); };
    if (l > 1.0) {
        const double inner = lg(l / (l - 1)) + std::log(l * p) / (1 - l) -
                             (n + p) / p * std::log((l - 1) * (n + p)) + lg(n / p + 2) -
                             lg(n / p + 1 / (l - 1) + 2);
        const double logA = std::log((l - 1) * n + l * p) + (l - 1) * p / ((l - 1) * n + l * p) * inner;
        const double e1 = ((n + p) * (l - 1) + p) / ((l - 1) * n);
        return {Branch::LambdaAbove1, std::exp(logA), std::exp(-e1 * logA)};
    }
    const double inner = (-n / p - 2) * std::log(1 - l) + lg(n / p + 2) + lg(l / (1 - l) - n / p) -
                         lg((l - 2) / (l - 1));
    const double logB = std::log(l * p / (n + p)) + ((1 - l) * (n + p) / p - 1) * std::log(l - n / (n + p)) +
                        (1 - l) * inner;
    return {Branch::LambdaBelow1, std::exp(logB), std::exp(p / ((l - 1) * n) * logB)};
}

double c2(const ParamSet& ps, GammaImpl impl) {
    const double n = ps.n, r = ps.r;
    if (!(r > 1.0) || !(r < n)) fail(ErrorKind::InvalidArgument, "c2 needs 1 < r < n");
    const double q = n * r / (n - r);
    const double logc = std::log(n) / q + (r - 1) / r * std::log((n - r) / (r - 1)) +
                        (log_gamma(n / r, impl) + log_gamma(n + 1 - n / r, impl) - log_gamma(n, impl)) / n;
    return std::exp(logc);
}

double fr_exponent(int n, double r, FrExponent e) {
    return e == FrExponent::Decaying ? 1.0 - n / r : 1.0 - r / n;
}

double sobolev_ratio(const std::function<double(double)>& P, const std::function<double(double)>& dP, int n,
                     double r, double x_lo, double x_hi, int nodes) {
    const double q = n * r / (n - r);
    const double V = quad::log_variable_gauss(
        [&](double t) { return std::pow(std::abs(dP(t)), r) * std::pow(t, n - 1); }, x_lo, x_hi, nodes);
    const double Lq = quad::log_variable_gauss(
        [&](double t) { return std::pow(std::abs(P(t)), q) * std::pow(t, n - 1); }, x_lo, x_hi, nodes);
    const double wn = omega(n);
    return wn * V / (std::pow(n * wn * Lq, r / q) * std::pow(wn, r / n));
}

namespace {

// c1^r at a given number of nodes; integrands are evaluated in log space so that
// slowly decaying cases (r close to n) can use very long x ranges.
double c1_power(int n, double r, int nodes) {
    const double e = 1.0 - n / r;
    const double s = r / (r - 1);
    const double q = n * r / (n - r);
    const double logC = std::log(std::abs(e) * s);
    auto log_dF = [&](double x) { return logC + x / (r - 1) + (e - 1) * softplus(s * x); };
    auto log_F = [&](double x) { return e * softplus(s * x); };
    const double kappa = (n - r) / (r - 1);
    const double x_mid = 10.0;
    const double x_hi = std::max(x_mid + 10.0, std::min(40.0 / kappa, 1e4));
    auto integrate = [&](auto&& g) {
        return quad::composite_gauss(g, -40.0, x_mid, nodes / 40, 20) +
               quad::composite_gauss(g, x_mid, x_hi, nodes / 40, 20);
    };
    const double V = integrate([&](double x) { return std::exp(r * log_dF(x) + n * x); });
    const double Lq = integrate([&](double x) { return std::exp(q * log_F(x) + n * x); });
    const double wn = omega(n);
    return wn * V / (std::pow(n * wn * Lq, r / q) * std::pow(wn, r / n));
}

}  // namespace

double c1(const ParamSet& ps) {
    if (!(ps.r > 1.0) || !(ps.r < ps.n)) fail(ErrorKind::InvalidArgument, "c1 needs 1 < r < n");
    static std::mutex mutex;
    static std::map<std::pair<int, double>, double> cache;
    const auto key = std::make_pair(ps.n, ps.r);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const double coarse = c1_power(ps.n, ps.r, 2000);
    const double fine = c1_power(ps.n, ps.r, 4000);
    if (!std::isfinite(fine) || !(fine > 0) || std::abs(fine - coarse) > 1e-8 * std::abs(fine))
        fail(ErrorKind::NumericFailure, "c1 quadrature did not converge " + describe(ps));
    const double value = std::pow(fine, 1.0 / ps.r);
    std::lock_guard lock(mutex);
    cache.emplace(key, value);
    return value;
}

double c_main(const ParamSet& ps) {
    validate(ps);
    const LayerConstant lc = layer_constant(ps);
    const double base = std::pow(c_np(ps) * lc.a, ps.r / ps.p);
    if (ps.r == 1.0) return ps.n * base;
    return ps.n * std::pow(c1(ps), ps.r) * base;
}

ConstantBundle constants(const ParamSet& ps, GammaImpl impl) {
    validate(ps);
    const LayerConstant lc = layer_constant(ps, impl);
    ConstantBundle b{};
    b.omega_n = omega(ps.n, impl);
    b.c_np = c_np(ps.n, ps.p, impl);
    b.branch = lc.branch;
    b.A_or_B = lc.A_or_B;
    b.a = lc.a;
    if (ps.r > 1.0) {
        b.c2 = c2(ps, impl);
        b.c1 = c1(ps);
    } else {
        b.c2 = std::pow(static_cast<double>(ps.n), (ps.n - 1.0) / ps.n);
        b.c1 = 1.0;
    }
    b.C_main = ps.n * std::pow(b.c1, ps.r) * std::pow(b.c_np * b.a, ps.r / ps.p);
    return b;
}

double extremal_profile(ProfileKind kind, const ParamSet& ps, double t, FrExponent e) {
    if (!(t >= 0)) fail(ErrorKind::InvalidArgument, "extremal profile needs t >= 0");
    if (kind == ProfileKind::F_r) {
        if (ps.r == 1.0) fail(ErrorKind::Unsupported, "F_r is undefined at r = 1");
        const double s = ps.r / (ps.r - 1);
        return std::exp(fr_exponent(ps.n, ps.r, e) * std::log1p(std::pow(t, s)));
    }
    const double l = ps.lambda;
    if (l > 1.0) {
        const double base = 1.0 - std::pow(t, ps.p);
        return base > 0 ? std::pow(base, 1.0 / (l - 1)) : 0.0;
    }
    return std::exp(std::log1p(std::pow(t, ps.p)) / (l - 1));
}

double extremal_derivative(ProfileKind kind, const ParamSet& ps, double t, FrExponent e) {
    if (!(t >= 0)) fail(ErrorKind::InvalidArgument, "extremal profile needs t >= 0");
    if (kind == ProfileKind::F_r) {
        if (ps.r == 1.0) fail(ErrorKind::Unsupported, "F_r is undefined at r = 1");
        const double s = ps.r / (ps.r - 1);
        const double ex = fr_exponent(ps.n, ps.r, e);
        if (t == 0) return 0.0;
        return ex * s * std::pow(t, s - 1) * std::exp((ex - 1) * std::log1p(std::pow(t, s)));
    }
    const double l = ps.lambda, p = ps.p;
    const double dtp = t == 0 ? (p == 1.0 ? 1.0 : 0.0) : p * std::pow(t, p - 1);
    if (l > 1.0) {
        const double base = 1.0 - std::pow(t, p);
        if (base <= 0) return 0.0;
        return -dtp / (l - 1) * std::pow(base, 1.0 / (l - 1) - 1);
    }
    return dtp / (l - 1) * std::exp((1.0 / (l - 1) - 1) * std::log1p(std::pow(t, p)));
}

SminResult smin(double a, double b, double alpha, double beta) {
    if (!(a > 0 && b > 0 && alpha > 0 && beta > 0))
        fail(ErrorKind::InvalidArgument, "smin needs positive arguments");
    const double s = std::pow(alpha * a / (beta * b), 1.0 / (alpha + beta));
    return {s, a * std::pow(s, -alpha) + b * std::pow(s, beta)};
}

}  // namespace lpc
