#include "convecta/oracle.hpp"

#include "convecta/eigensolve.hpp"
#include "convecta/errors.hpp"

#include <cmath>

namespace convecta {

CollocationGrid make_collocation_grid(int count) {
    if (count < 2) throw ContractError("make_collocation_grid: need at least 2 points");
    const int p = count;
    CollocationGrid grid;
    grid.points.resize(p);

    // Chebyshev extrema on [-1, 1] with the standard differentiation matrix
    // (negative-sum trick on the diagonal), then mapped to [-1/2, 1/2].
    Eigen::VectorXd xh(p), c(p);
    for (int j = 0; j < p; ++j) {
        xh(j) = std::cos(M_PI * j / (p - 1));
        c(j) = (j == 0 || j == p - 1) ? 2.0 : 1.0;
        if (j % 2 == 1) c(j) = -c(j);
    }
    Eigen::MatrixXd d(p, p);
    for (int i = 0; i < p; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            d(i, j) = (c(i) / c(j)) / (xh(i) - xh(j));
            rowsum += d(i, j);
        }
        d(i, i) = -rowsum;
    }
    grid.d1 = 2.0 * d; // d/dx = 2 d/dxhat on the half-length interval
    grid.d2 = grid.d1 * grid.d1;
    grid.d3 = grid.d2 * grid.d1;
    grid.d4 = grid.d2 * grid.d2;
    for (int j = 0; j < p; ++j) grid.points[j] = 0.5 * xh(j);
    return grid;
}

namespace {

// The coupled system in second-order companion form with Phi = (D^2-a^2)W:
//   (D^2-a^2)W - Phi = 0,  (D^2-a^2)Phi - Theta = 0,
//   -(D^2-a^2)Theta - a^2 R g W = 0,
// with W = DW = Theta = 0 imposed by row replacement (replaced rows carry zero
// in the R block). Only second-order differentiation enters, which keeps the
// eigenvalue roundoff floor orders of magnitude below the 1e-8 self-convergence
// requirement.
Spectrum collocation_solve(const ProblemParams& params, int points) {
    params.validate();
    if (points < 16) throw ContractError("collocation_rayleigh: need at least 16 points");
    const CollocationGrid grid = make_collocation_grid(points);
    const int p = points;
    const double a2 = params.a2;

    const Eigen::MatrixXd l2 = grid.d2 - a2 * Eigen::MatrixXd::Identity(p, p);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3 * p, 3 * p);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(3 * p, 3 * p);

    a.block(0, 0, p, p) = l2;
    a.block(0, p, p, p) = -Eigen::MatrixXd::Identity(p, p);
    a.block(p, p, p, p) = l2;
    a.block(p, 2 * p, p, p) = -Eigen::MatrixXd::Identity(p, p);
    a.block(2 * p, 2 * p, p, p) = -l2;
    for (int i = 0; i < p; ++i) {
        // g in the centered coordinate; the eigenvalue is domain-invariant.
        const double x = grid.points[i];
        b(2 * p + i, i) = -a2 * (1.0 - params.n_rate * x);
    }

    auto replace_row = [&](int row, int block, const Eigen::RowVectorXd& values) {
        a.row(row).setZero();
        b.row(row).setZero();
        a.block(row, block * p, 1, p) = values;
    };
    Eigen::RowVectorXd unit0 = Eigen::RowVectorXd::Zero(p), unit1 = Eigen::RowVectorXd::Zero(p);
    unit0(0) = 1.0;
    unit1(p - 1) = 1.0;
    replace_row(0, 0, unit0);           // W(1/2) = 0
    replace_row(p - 1, 0, unit1);       // W(-1/2) = 0
    replace_row(p, 0, grid.d1.row(0));  // DW(1/2) = 0
    replace_row(2 * p - 1, 0, grid.d1.row(p - 1));
    replace_row(2 * p, 2, unit0);       // Theta(1/2) = 0
    replace_row(3 * p - 1, 2, unit1);

    return solve_pencil(a, b);
}

} // namespace

double collocation_rayleigh(const ProblemParams& params, int points) {
    return *collocation_solve(params, points).r_min;
}

CollocationMode collocation_mode(const ProblemParams& params, int points) {
    const Spectrum s = collocation_solve(params, points);
    CollocationMode mode;
    mode.rayleigh = *s.r_min;
    const CollocationGrid grid = make_collocation_grid(points);
    mode.points = grid.points;
    // The r_min eigenvector is real up to a complex phase; rotate it onto the
    // real axis before taking the W block.
    const Eigen::VectorXcd v = s.r_min_vector;
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const std::complex<double> phase = v(imax) / std::abs(v(imax));
    mode.w = (v / phase).real().head(points);
    return mode;
}

} // namespace convecta
