#pragma once

#include "convecta/assembly.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace convecta {

/// Finite generalized eigenvalues of a pencil and the physically relevant one.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues; ///< finite, residual-checked
    std::optional<double> r_min; ///< smallest real-positive eigenvalue, if any
    Eigen::VectorXcd r_min_vector; ///< eigenvector of r_min (empty if none)
};

/// QZ solve of (mat_a + R*mat_b) c = 0, i.e. the generalized eigenproblem of
/// the pair (mat_a, -mat_b). Eigenvalues of magnitude above 1e12 (structurally
/// singular mat_b rows) are discarded; the rest are residual-checked. Throws
/// NoOnsetError when no real-positive eigenvalue survives.
Spectrum solve_pencil(const Eigen::MatrixXd& mat_a, const Eigen::MatrixXd& mat_b,
                      double tol_imag = 1e-6);
Spectrum solve_pencil(const GalerkinPencil& pencil, double tol_imag = 1e-6);

/// det(mat_a + r*mat_b) normalized by det(mat_a); falls back to max-entry
/// scaling when mat_a is singular. Sign changes bracket eigenvalues.
double secular_determinant(const GalerkinPencil& pencil, double r);

} // namespace convecta
