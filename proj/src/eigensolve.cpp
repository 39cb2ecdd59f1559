#include "convecta/eigensolve.hpp"

#include "convecta/errors.hpp"

#include <cmath>
#include <limits>

namespace convecta {

namespace {

constexpr double kInfiniteMagnitude = 1e12;
constexpr double kResidualTol = 1e-6;

// Signed log-determinant via LU: returns {sign, log|det|}; sign 0 for a
// singular factor.
std::pair<double, double> signed_log_det(const Eigen::MatrixXd& m) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    double sign = lu.permutationP().determinant(); // +-1
    double logdet = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        const double d = lu.matrixLU()(i, i);
        if (d == 0.0 || !std::isfinite(d)) return {0.0, -std::numeric_limits<double>::infinity()};
        if (d < 0) sign = -sign;
        logdet += std::log(std::abs(d));
    }
    return {sign, logdet};
}

} // namespace

Spectrum solve_pencil(const Eigen::MatrixXd& mat_a, const Eigen::MatrixXd& mat_b,
                      double tol_imag) {
    if (mat_a.rows() != mat_a.cols() || mat_b.rows() != mat_b.cols() ||
        mat_a.rows() != mat_b.rows())
        throw ContractError("solve_pencil: matrices must be square and of equal order");

    Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges;
    ges.compute(mat_a, -mat_b, /*computeEigenvectors=*/true);
    if (ges.info() != Eigen::Success)
        throw NumericError("solve_pencil: QZ iteration failed");

    const double norm_scale = mat_a.norm();
    Spectrum spectrum;
    int best = -1;
    for (int i = 0; i < mat_a.rows(); ++i) {
        const std::complex<double> alpha = ges.alphas()(i);
        const double beta = ges.betas()(i);
        if (beta == 0.0) continue;
        const std::complex<double> r = alpha / beta;
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) continue;
        if (std::abs(r) > kInfiniteMagnitude) continue;

        const Eigen::VectorXcd v = ges.eigenvectors().col(i);
        const Eigen::VectorXcd residual =
            (mat_a * v.real() + mat_b * (r * v).real()).cast<std::complex<double>>() +
            std::complex<double>(0, 1) *
                (mat_a * v.imag() + mat_b * (r * v).imag()).cast<std::complex<double>>();
        const double scale = (norm_scale + std::abs(r) * mat_b.norm()) * v.norm();
        if (!(residual.norm() <= kResidualTol * scale)) continue;

        spectrum.eigenvalues.push_back(r);
        const bool real_positive = r.real() > 0.0 && std::abs(r.imag()) <= tol_imag * std::abs(r.real());
        if (real_positive && (!spectrum.r_min || r.real() < *spectrum.r_min)) {
            spectrum.r_min = r.real();
            best = i;
        }
    }
    if (!spectrum.r_min)
        throw NoOnsetError("solve_pencil: no positive real eigenvalue (outside the "
                           "instability regime or truncation too small)");
    spectrum.r_min_vector = ges.eigenvectors().col(best);
    return spectrum;
}

Spectrum solve_pencil(const GalerkinPencil& pencil, double tol_imag) {
    return solve_pencil(pencil.mat_a, pencil.mat_b, tol_imag);
}

double secular_determinant(const GalerkinPencil& pencil, double r) {
    if (!std::isfinite(r)) throw ContractError("secular_determinant: r must be finite");
    const Eigen::MatrixXd m = pencil.mat_a + r * pencil.mat_b;
    const auto [sign_r, log_r] = signed_log_det(m);
    const auto [sign_0, log_0] = signed_log_det(pencil.mat_a);
    if (sign_0 == 0.0 || !std::isfinite(log_0)) {
        // mat_a singular at r = 0: fall back to max-entry scaling.
        const double s = m.cwiseAbs().maxCoeff();
        if (s == 0.0) return 0.0;
        return (m / s).determinant();
    }
    if (sign_r == 0.0) return 0.0;
    return sign_r * sign_0 * std::exp(log_r - log_0);
}

} // namespace convecta
