#include "lpc/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <map>
#include <mutex>

namespace lpc::quad {

const GaussRule& gauss_legendre(int order) {
    if (order < 1) fail(ErrorKind::InvalidArgument, "Gauss-Legendre order must be positive");
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    // boost returns the non-negative zeros in ascending order
    const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(order);
    GaussRule rule;
    for (double x : zeros) {
        const double dp = boost::math::legendre_p_prime<double>(order, x);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        if (x == 0.0) {
            rule.nodes.push_back(0.0);
            rule.weights.push_back(w);
        } else {
            rule.nodes.push_back(x);
            rule.weights.push_back(w);
            rule.nodes.push_back(-x);
            rule.weights.push_back(w);
        }
    }
    std::vector<std::size_t> idx(rule.nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return rule.nodes[a] < rule.nodes[b]; });
    GaussRule sorted;
    for (auto i : idx) {
        sorted.nodes.push_back(rule.nodes[i]);
        sorted.weights.push_back(rule.weights[i]);
    }
    return cache.emplace(order, std::move(sorted)).first->second;
}

}  // namespace lpc::quad
