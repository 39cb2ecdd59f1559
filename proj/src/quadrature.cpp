#include "convecta/quadrature.hpp"

#include "convecta/errors.hpp"

#include <cmath>

namespace convecta {

namespace {

// Legendre P_q and P_q' at t by the three-term recurrence.
void legendre_pair(int q, double t, double& p, double& dp) {
    double pm1 = 1.0, pm = t;
    if (q == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int m = 1; m < q; ++m) {
        const double pn = ((2 * m + 1) * t * pm - m * pm1) / (m + 1);
        pm1 = pm;
        pm = pn;
    }
    p = pm;
    dp = q * (t * pm - pm1) / (t * t - 1.0);
}

} // namespace

QuadratureRule gauss_legendre(int q, double lo, double hi) {
    if (q < 1) throw ContractError("gauss_legendre: order must be >= 1");

    QuadratureRule rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);

    const double mid = 0.5 * (lo + hi);
    const double halflen = 0.5 * (hi - lo);

    // Roots come in +/- pairs; solve the upper half and mirror.
    for (int i = 0; i < (q + 1) / 2; ++i) {
        // Tricomi-type initial guess for the i-th root (descending order).
        double t = std::cos(M_PI * (i + 0.75) / (q + 0.5));
        double p = 0.0, dp = 1.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(q, t, p, dp);
            const double step = p / dp;
            t -= step;
            if (std::abs(step) < 1e-15) {
                converged = true;
                break;
            }
        }
        if (!converged) throw NumericError("gauss_legendre: Newton iteration did not converge");
        legendre_pair(q, t, p, dp);
        const double w = 2.0 / ((1.0 - t * t) * dp * dp);
        rule.nodes[i] = mid - halflen * t;
        rule.nodes[q - 1 - i] = mid + halflen * t;
        rule.weights[i] = halflen * w;
        rule.weights[q - 1 - i] = halflen * w;
    }
    if (q % 2 == 1) {
        // Midpoint node: P_q(0) = 0 for odd q.
        double p, dp;
        legendre_pair(q, 0.0, p, dp);
        rule.nodes[q / 2] = mid;
        rule.weights[q / 2] = halflen * 2.0 / (dp * dp);
    }
    return rule;
}

} // namespace convecta
