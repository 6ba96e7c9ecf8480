#include "lpc/oracles.hpp"

#include "lpc/quadrature.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>

namespace lpc::oracle {

double numeric_smin(double a, double b, double alpha, double beta) {
    auto f = [&](double x) { return a * std::exp(-alpha * x) + b * std::exp(beta * x); };
    const auto [x, v] = boost::math::tools::brent_find_minima(f, -60.0, 60.0, std::numeric_limits<double>::digits);
    (void)x;
    return v;
}

double layer_constant_numeric(const ParamSet& ps) {
    validate(ps);
    const double n = ps.n, p = ps.p, l = ps.lambda;
    const double e = (n + p) / p;
    if (l > 1.0) {
        const double P = quad::finite([&](double t) { return std::pow(1 - std::pow(t, l - 1), e); }, 0.0, 1.0);
        return numeric_smin(1.0 / l, std::pow(P, p / (n + p)), l - 1, p / (n + p));
    }
    const double Q = quad::finite([&](double t) { return std::pow(std::pow(t, l - 1) - 1, e); }, 0.0, 1.0);
    return l * numeric_smin(1.0, std::pow(Q, p / (n + p)), 1 - l, p / (n + p) + l - 1);
}

double c1_closed_form(const ParamSet& ps) {
    const double n = ps.n, r = ps.r;
    return std::pow(n, (r - n) / (n * r)) * c2(ps, GammaImpl::Std);
}

std::vector<Row> constant_oracles() {
    std::vector<Row> rows;
    auto rel = [](double v, double o) { return std::abs(v - o) / std::abs(o); };
    const ParamSet layer_cases[] = {{2, 1, 1, 2}, {2, 2, 1, 3}, {2, 2, 1, 0.9}, {3, 1, 1, 2},
                                    {2, 1, 1, 0.8}, {2, 2, 1, 0.8}, {3, 2, 1, 1.5}, {2, 3, 1, 0.7}};
    for (const auto& ps : layer_cases) {
        const double v = layer_constant(ps).A_or_B;
        const double o = layer_constant_numeric(ps);
        rows.push_back({ps.lambda > 1 ? "A" : "B", ps, v, o, rel(v, o)});
    }
    const ParamSet c1_cases[] = {{2, 1, 1.5, 2}, {2, 1, 1.2, 2}, {3, 1, 2, 2}, {3, 1, 1.5, 2}};
    for (const auto& ps : c1_cases) {
        const double v = c1(ps);
        const double o = c1_closed_form(ps);
        rows.push_back({"c1", ps, v, o, rel(v, o)});
    }
    return rows;
}

}  // namespace lpc::oracle
