#pragma once

#include "convecta/bases.hpp"
#include "convecta/critical.hpp"
#include "convecta/physics.hpp"

#include <vector>

namespace convecta {

inline constexpr unsigned kDiagnosticsSeed = 20240809u;

/// Minimum eigenvalues of the Gram matrices of the block-diagonal operator:
/// the (D^2-a^2)^2 form on the W family and the -(D^2-a^2) form on the
/// matching Theta family. Both must be positive.
struct PositivityReport {
    double min_eigenvalue_w_block;
    double min_eigenvalue_theta_block;
};

PositivityReport check_positivity(const ProblemParams& params, const BasisFamily& family);
/// Raw-a^2 entry point (admits the degenerate a^2 = 0 case).
PositivityReport check_positivity_a2(double a2, const BasisFamily& family);

/// Quadrature evaluation of (LW, W*) - (W, LW*) with L = (D^2-a^2)^3 on
/// degree-9 polynomial probes. Probes in the operator domain
/// (W = DW = (D^2-a^2)^2 W = 0 at z = 0, 1) pair asymmetrically with each
/// other; probes matched to the adjoint conditions
/// (W* = D^2 W* = D(D^2-a^2) W* = 0) close the boundary terms exactly.
struct AsymmetryReport {
    double generic_max;         ///< max relative asymmetry over generic pairs
    double adjoint_matched_max; ///< same with adjoint-matched partners
    int probe_pairs;
};

AsymmetryReport check_sixth_order_asymmetry(double a2, int probe_count,
                                            unsigned seed = kDiagnosticsSeed);

/// Contrast of N-sensitivity across paths: the weighted-polynomial pencil is
/// entry-wise N-independent, the Legendre pencil is not, and the Chandrasekhar
/// eigenvalue moves with N.
struct ParityLossReport {
    std::vector<double> n_values;
    double rama_rao_max_pencil_diff;      ///< expected < 1e-12
    double rama_rao_max_eigen_rel_diff;   ///< expected < 1e-8
    double legendre_max_pencil_diff;      ///< expected > 1e-6
    std::vector<double> chandrasekhar_r;  ///< per N, Theta-eliminated path
};

ParityLossReport parity_loss_demo(double a2, const std::vector<double>& n_values);

/// R per truncation plus successive deltas and their log-ratios (descriptive
/// rate; no asymptotic order asserted).
struct ConvergenceReport {
    ProblemParams params;
    Method method;
    std::vector<std::pair<int, double>> sequence; ///< (truncation, R)
    std::vector<double> deltas;                   ///< |R_m - R_{m-1}|
    std::vector<double> estimated_rate;           ///< log(delta_k / delta_{k-1})
};

ConvergenceReport convergence_study(const ProblemParams& params, const Method& method,
                                    const std::vector<int>& truncations);

} // namespace convecta
