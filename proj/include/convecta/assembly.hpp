#pragma once

#include "convecta/bases.hpp"
#include "convecta/physics.hpp"

#include <Eigen/Dense>

namespace convecta {

enum class AssemblyPath { Coupled, ThetaEliminated, RamaRao };

std::string to_string(AssemblyPath p);

struct PencilMeta {
    ProblemParams params;
    BasisFamily w_family;
    BasisFamily theta_family; // size 0 on the Theta-eliminated path
    AssemblyPath path = AssemblyPath::Coupled;
    int quad_order = 0;
};

/// Dense pencil with spectrum { R : (mat_a + R*mat_b) c = 0 }; mat_a carries
/// the R-independent projections, mat_b everything multiplying R.
struct GalerkinPencil {
    Eigen::MatrixXd mat_a;
    Eigen::MatrixXd mat_b;
    PencilMeta meta;

    int order() const { return static_cast<int>(mat_a.rows()); }
};

/// Solution of (D^2 - a^2) psi = (N x - 1) * mode with psi(+-1/2) = 0, for one
/// Chandrasekhar mode: an undetermined-coefficient particular part on the
/// ansatz {(c1 + c2 x) cosh, (c3 + c4 x) sinh, (c5 + c6 x) cos, (c7 + c8 x) sin}
/// at the mode's own frequency, plus the homogeneous a_h cosh(ax) + b_h sinh(ax)
/// enforcing the boundary values. The full Theta of the eliminated path is
/// -a^2 R times... the pencil applies the a^2 R scaling; eval() is the unscaled psi.
struct ThetaParticular {
    ChandrasekharKind kind;
    double freq = 0.0; // lambda_n or mu_n
    double a = 0.0;    // sqrt(a2)
    Eigen::Vector4d hyp{};  // cosh, x*cosh, sinh, x*sinh coefficients
    Eigen::Vector4d trig{}; // cos, x*cos, sin, x*sin coefficients
    double a_h = 0.0;
    double b_h = 0.0;

    /// Particular part only.
    double particular(double x) const;
    /// Particular plus homogeneous part; vanishes at x = +-1/2.
    double eval(double x) const;
};

/// Derive and certify the particular solution for mode n of the given kind.
/// Throws ResonanceError when |freq^2 - a^2| < 1e-6 (the caller should
/// perturb a^2) and NumericError if the ODE-residual certificate fails.
ThetaParticular theta_particular(const ProblemParams& params, const ChandrasekharRoots& roots,
                                 ChandrasekharKind kind, int n);

/// Standard Galerkin block pencil of the coupled system (test = trial):
/// rows [W-family] carry <(D^2-a^2)^2 W, W_i> - <Theta, W_i>, rows
/// [Theta-family] carry <-(D^2-a^2) Theta, Th_i> with the R block
/// -a^2 <g W, Th_i> in mat_b. Families are evaluated through the domain
/// convention of params; quad_order 0 picks the over-integration default.
GalerkinPencil assemble_coupled(const ProblemParams& params, const BasisFamily& w_family,
                                const BasisFamily& theta_family, int quad_order = 0);

/// Chandrasekhar path with Theta eliminated through theta_particular: order
/// count_even + count_odd; mat_b holds -a^2 <psi_n, mode_m>.
GalerkinPencil assemble_theta_eliminated(const ProblemParams& params,
                                         const ChandrasekharRoots& roots,
                                         const BasisFamily& family, int quad_order = 0);

/// Weighted-polynomial coupled pencil: h1_m trial/test for W, h2_m for Theta.
/// The N-dependent entries vanish by parity, so the pencil is N-independent.
GalerkinPencil assemble_rama_rao(const ProblemParams& params, int count, int quad_order = 0);

/// Integrated shifted-Legendre coupled pencil on [0,1] (requires the Shifted
/// domain convention); N survives in the pencil.
GalerkinPencil assemble_legendre(const ProblemParams& params, int count, int quad_order = 0);

} // namespace convecta
