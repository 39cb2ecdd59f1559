#pragma once

#include "convecta/physics.hpp"

#include <Eigen/Dense>

#include <vector>

namespace convecta {

/// Chebyshev-extrema collocation grid on [-1/2, 1/2] with differentiation
/// matrices up to fourth order.
struct CollocationGrid {
    std::vector<double> points;
    Eigen::MatrixXd d1, d2, d3, d4;

    int size() const { return static_cast<int>(points.size()); }
};

CollocationGrid make_collocation_grid(int count);

/// Independent reference value of R: collocation of the coupled system with
/// boundary rows replaced (W, DW at both ends; Theta at both ends), solved as
/// a generalized eigenproblem. Structurally independent of every Galerkin
/// assembly path.
double collocation_rayleigh(const ProblemParams& params, int points = 64);

/// Same solve, also returning the W part of the critical eigenfunction on the
/// grid (used by symmetry diagnostics).
struct CollocationMode {
    double rayleigh;
    std::vector<double> points;
    Eigen::VectorXd w;
};
CollocationMode collocation_mode(const ProblemParams& params, int points = 64);

} // namespace convecta
