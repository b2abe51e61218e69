#include "bergman/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

cplx moment(const RadialProfile& u, int k) {
    if (k < 0) throw std::invalid_argument("moment: k must be non-negative");
    cplx acc{0.0, 0.0};
    const auto& c = u.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        acc += c[j] / static_cast<double>(j + static_cast<std::size_t>(k) + 1);
    }
    return acc;
}

cplx omega(const RadialProfile& u, int m) {
    if (m < 0) throw std::invalid_argument("omega: m must be non-negative");
    return 2.0 * (m + 1) * moment(u, 2 * m + 1);
}

EigenvalueSequence eigenvalue_sequence(const RadialProfile& u, std::size_t n) {
    if (n == 0) throw std::invalid_argument("eigenvalue_sequence: n must be positive");
    EigenvalueSequence seq;
    seq.source = u.describe();
    seq.values.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        seq.values.push_back(omega(u, static_cast<int>(m)));
    }
    return seq;
}

QuadratureRule gauss_legendre_01(std::size_t num_nodes) {
    if (num_nodes == 0) throw std::invalid_argument("quadrature: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(num_nodes);
    rule.weights.resize(num_nodes);
    const std::size_t n = num_nodes;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Roots of P_n on [-1,1], Newton from the Chebyshev-like guess.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double pn = (n == 1) ? x : p1;
            const double pn1 = (n == 1) ? 1.0 : p0;
            dp = n * (pn1 - x * pn) / (1.0 - x * x);
            const double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map from [-1,1] to [0,1]; x is in the lower half, -x in the upper.
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.weights[i] = 0.5 * w;
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

cplx quadrature_moment(const RadialProfile& u, int k, std::size_t nodes) {
    if (k < 0) throw std::invalid_argument("quadrature_moment: k must be non-negative");
    const QuadratureRule rule = gauss_legendre_01(nodes);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < nodes; ++i) {
        acc += rule.weights[i] * u.eval(rule.nodes[i]) * std::pow(rule.nodes[i], k);
    }
    return acc;
}

}  // namespace bergman
