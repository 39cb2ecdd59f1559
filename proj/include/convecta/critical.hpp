#pragma once

#include "convecta/physics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace convecta {

enum class MethodKind {
    ChandrasekharCoupled,    // Chandrasekhar W + sine Theta, coupled blocks
    ChandrasekharEliminated, // Chandrasekhar W, Theta eliminated analytically
    Legendre,                // integrated shifted-Legendre pair on [0,1]
    RamaRao,                 // weighted-polynomial pair
    Collocation              // reference solver (not a production path)
};

std::string to_string(MethodKind k);

/// Solver selection: family/path plus truncation. truncation 0 picks the
/// per-method default (6+6 Chandrasekhar modes, 8 Legendre modes, 8 weighted
/// modes, 64 collocation points); theta_count 0 means twice the truncation
/// for the coupled sine family; quad_order 0 means the over-integration default.
struct Method {
    MethodKind kind = MethodKind::ChandrasekharCoupled;
    int truncation = 0;
    int theta_count = 0;
    int quad_order = 0;

    int resolved_truncation() const;
    int resolved_theta_count() const;
};

/// Marginal Rayleigh number at fixed (a^2, N): assemble, solve, take r_min.
double rayleigh_at(const ProblemParams& params, const Method& method);

struct NeutralCurve {
    double n_rate = 0.0;
    std::vector<std::pair<double, double>> samples; ///< (a^2, R), a^2 increasing
    std::vector<double> skipped;                    ///< grid points with no onset
};

/// One rayleigh_at per grid point; no-onset points are omitted and reported in
/// `skipped`. jobs > 1 evaluates grid points concurrently (output order is the
/// input order either way).
NeutralCurve neutral_curve(double n_rate, const std::vector<double>& a2_grid,
                           const Method& method, int jobs = 1);

struct CriticalPoint {
    double n_rate = 0.0;
    double a2_c = 0.0;
    double r_c = 0.0;
    Method method;
};

/// Golden-section minimization of a^2 -> R over the bracket (absolute a^2
/// tolerance 1e-4), with a post-hoc local-minimum certificate on the five
/// nearest sample points. A minimum on the bracket edge raises BracketError.
CriticalPoint critical_point(double n_rate, std::pair<double, double> bracket,
                             const Method& method);

} // namespace convecta
