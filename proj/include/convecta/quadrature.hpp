#pragma once

#include <vector>

namespace convecta {

/// Gauss-Legendre rule on [lo, hi]: exact for polynomials of degree <= 2q-1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int order() const { return static_cast<int>(nodes.size()); }

    template <typename F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// Nodes and weights by Newton iteration on the degree-q Legendre polynomial,
/// mapped from [-1, 1] to [lo, hi].
QuadratureRule gauss_legendre(int q, double lo, double hi);

} // namespace convecta
