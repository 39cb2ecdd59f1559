#include "convecta/diagnostics.hpp"

#include "convecta/assembly.hpp"
#include "convecta/eigensolve.hpp"
#include "convecta/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <random>
#include <string>

namespace convecta {

namespace {

// ---- positivity ----

struct FamilyTable {
    int size;
    // values[d](j, p): d-th derivative of member j at node p, natural coordinate
    std::vector<Eigen::MatrixXd> values;
};

FamilyTable tabulate(const BasisFamily& family, bool w_role, const QuadratureRule& rule,
                     const ChandrasekharRoots* roots, int max_deriv) {
    FamilyTable t;
    t.size = family.size();
    t.values.assign(max_deriv + 1, Eigen::MatrixXd(t.size, rule.order()));
    for (int d = 0; d <= max_deriv; ++d)
        for (int j = 0; j < t.size; ++j)
            for (int p = 0; p < rule.order(); ++p) {
                const double s = rule.nodes[p];
                double v = 0.0;
                switch (family.kind) {
                    case BasisKind::Chandrasekhar:
                        v = j < family.count_even
                                ? eval_chandrasekhar(*roots, ChandrasekharKind::C, j + 1, s, d)
                                : eval_chandrasekhar(*roots, ChandrasekharKind::S,
                                                     j - family.count_even + 1, s, d);
                        break;
                    case BasisKind::RamaRaoWeighted:
                        v = eval_rama_rao(w_role ? RamaRaoKind::h1 : RamaRaoKind::h2, j, s, d);
                        break;
                    case BasisKind::ShiftedLegendreIntegrated:
                        v = eval_legendre_integrated(w_role ? LegendreKind::beta : LegendreKind::phi,
                                                     j + 1, s, d);
                        break;
                    case BasisKind::SineDirichlet: v = eval_sine_dirichlet(j + 1, s, d); break;
                }
                t.values[d](j, p) = v;
            }
    return t;
}

double min_symmetric_eigenvalue(const Eigen::MatrixXd& gram, const char* what) {
    const double scale = gram.cwiseAbs().maxCoeff();
    const double asym = (gram - gram.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= 1e-8 * std::max(scale, 1e-300)))
        throw NumericError(std::string("check_positivity: ") + what +
                           " Gram matrix asymmetric beyond 1e-8 relative (assembly bug)");
    const Eigen::MatrixXd sym = 0.5 * (gram + gram.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success)
        throw NumericError("check_positivity: eigenvalue computation failed");
    return es.eigenvalues().minCoeff();
}

// ---- polynomial probe machinery (degree 9, coefficient vectors) ----

constexpr int kProbeCoeffs = 10;

// Row of the functional f -> f^(d)(z) in the monomial coefficient basis.
Eigen::RowVectorXd deriv_row(double z, int d) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(kProbeCoeffs);
    for (int i = d; i < kProbeCoeffs; ++i) {
        double c = 1.0;
        for (int k = 0; k < d; ++k) c *= (i - k);
        row(i) = c * std::pow(z, i - d);
    }
    return row;
}

Eigen::VectorXd poly_d2(const Eigen::VectorXd& c) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(c.size());
    for (int i = 2; i < c.size(); ++i) out(i - 2) = c(i) * i * (i - 1);
    return out;
}

double poly_eval(const Eigen::VectorXd& c, double z) {
    double v = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * z + c(i);
    return v;
}

// (D^2 - a^2)^3 on coefficients.
Eigen::VectorXd sixth_order_apply(Eigen::VectorXd c, double a2) {
    for (int k = 0; k < 3; ++k) c = poly_d2(c) - a2 * c;
    return c;
}

// Null-space basis of the six boundary constraints.
Eigen::MatrixXd constraint_kernel(double a2, bool adjoint_conditions) {
    Eigen::MatrixXd rows(6, kProbeCoeffs);
    int r = 0;
    for (double z : {0.0, 1.0}) {
        if (adjoint_conditions) {
            rows.row(r++) = deriv_row(z, 0);                          // W* = 0
            rows.row(r++) = deriv_row(z, 2);                          // D^2 W* = 0
            rows.row(r++) = deriv_row(z, 3) - a2 * deriv_row(z, 1);   // D(D^2-a^2) W* = 0
        } else {
            rows.row(r++) = deriv_row(z, 0);                          // W = 0
            rows.row(r++) = deriv_row(z, 1);                          // DW = 0
            rows.row(r++) = deriv_row(z, 4) - 2.0 * a2 * deriv_row(z, 2) +
                            a2 * a2 * deriv_row(z, 0);                // (D^2-a^2)^2 W = 0
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
    return lu.kernel();
}

} // namespace

PositivityReport check_positivity_a2(double a2, const BasisFamily& family) {
    family.validate();
    if (!(a2 >= 0.0)) throw ContractError("check_positivity: a2 must be >= 0");
    if (family.kind == BasisKind::SineDirichlet)
        throw ContractError("check_positivity: the sine family has no W block");

    // Theta partner family for the diagonal operator's second block.
    BasisFamily theta = family;
    if (family.kind == BasisKind::Chandrasekhar)
        theta = BasisFamily{BasisKind::SineDirichlet, family.size(), 0};

    ChandrasekharRoots roots;
    if (family.kind == BasisKind::Chandrasekhar)
        roots = chandrasekhar_roots(family.count_even, family.count_odd);

    const bool centered = family.kind == BasisKind::Chandrasekhar ||
                          family.kind == BasisKind::RamaRaoWeighted;
    const int q = default_quad_order(family, theta);
    const QuadratureRule w_rule = gauss_legendre(q, centered ? -0.5 : 0.0, centered ? 0.5 : 1.0);
    const bool theta_centered = theta.kind == BasisKind::RamaRaoWeighted;
    const QuadratureRule t_rule =
        gauss_legendre(q, theta_centered ? -0.5 : 0.0, theta_centered ? 0.5 : 1.0);

    const FamilyTable w = tabulate(family, true, w_rule, &roots, 4);
    const FamilyTable t = tabulate(theta, false, t_rule, nullptr, 2);

    Eigen::MatrixXd gw(w.size, w.size), gt(t.size, t.size);
    for (int i = 0; i < w.size; ++i)
        for (int j = 0; j < w.size; ++j) {
            double s = 0.0;
            for (int p = 0; p < w_rule.order(); ++p)
                s += w_rule.weights[p] *
                     (w.values[4](j, p) - 2.0 * a2 * w.values[2](j, p) +
                      a2 * a2 * w.values[0](j, p)) *
                     w.values[0](i, p);
            gw(i, j) = s;
        }
    for (int i = 0; i < t.size; ++i)
        for (int j = 0; j < t.size; ++j) {
            double s = 0.0;
            for (int p = 0; p < t_rule.order(); ++p)
                s += t_rule.weights[p] * (-t.values[2](j, p) + a2 * t.values[0](j, p)) *
                     t.values[0](i, p);
            gt(i, j) = s;
        }

    return {min_symmetric_eigenvalue(gw, "W-block"),
            min_symmetric_eigenvalue(gt, "Theta-block")};
}

PositivityReport check_positivity(const ProblemParams& params, const BasisFamily& family) {
    params.validate();
    return check_positivity_a2(params.a2, family);
}

AsymmetryReport check_sixth_order_asymmetry(double a2, int probe_count, unsigned seed) {
    if (probe_count < 2)
        throw ContractError("check_sixth_order_asymmetry: need at least 2 probes");

    const Eigen::MatrixXd ker_op = constraint_kernel(a2, false);
    const Eigen::MatrixXd ker_adj = constraint_kernel(a2, true);
    if (ker_op.cols() < 1 || ker_adj.cols() < 1)
        throw NumericError("check_sixth_order_asymmetry: constraint solve degenerate");

    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const QuadratureRule rule = gauss_legendre(16, 0.0, 1.0);

    auto draw = [&](const Eigen::MatrixXd& kernel) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            Eigen::VectorXd coeffs(kernel.cols());
            for (int i = 0; i < coeffs.size(); ++i) coeffs(i) = normal(rng);
            Eigen::VectorXd probe = kernel * coeffs;
            if (probe.norm() > 1e-8) return probe;
        }
        throw NumericError("check_sixth_order_asymmetry: probe draw degenerate");
    };
    auto pairing_gap = [&](const Eigen::VectorXd& w, const Eigen::VectorXd& ws) {
        const Eigen::VectorXd lw = sixth_order_apply(w, a2);
        const Eigen::VectorXd lws = sixth_order_apply(ws, a2);
        double lw_ws = 0.0, w_lws = 0.0;
        for (int p = 0; p < rule.order(); ++p) {
            const double z = rule.nodes[p];
            lw_ws += rule.weights[p] * poly_eval(lw, z) * poly_eval(ws, z);
            w_lws += rule.weights[p] * poly_eval(w, z) * poly_eval(lws, z);
        }
        const double denom = std::abs(lw_ws) + std::abs(w_lws);
        return denom > 1e-12 ? std::abs(lw_ws - w_lws) / denom : 0.0;
    };

    AsymmetryReport report{0.0, 0.0, probe_count};
    for (int i = 0; i < probe_count; ++i) {
        const Eigen::VectorXd w = draw(ker_op);
        report.generic_max = std::max(report.generic_max, pairing_gap(w, draw(ker_op)));
        report.adjoint_matched_max =
            std::max(report.adjoint_matched_max, pairing_gap(w, draw(ker_adj)));
    }
    return report;
}

ParityLossReport parity_loss_demo(double a2, const std::vector<double>& n_values) {
    if (n_values.size() < 2)
        throw ContractError("parity_loss_demo: need at least two distinct N values");
    for (std::size_t i = 0; i < n_values.size(); ++i)
        for (std::size_t j = i + 1; j < n_values.size(); ++j)
            if (n_values[i] == n_values[j])
                throw ContractError("parity_loss_demo: N values must be distinct");

    ParityLossReport report;
    report.n_values = n_values;
    report.rama_rao_max_pencil_diff = 0.0;
    report.rama_rao_max_eigen_rel_diff = 0.0;
    report.legendre_max_pencil_diff = 0.0;

    constexpr int kCount = 8;
    constexpr int kChand = 6;
    std::optional<GalerkinPencil> rr0, lg0;
    std::optional<double> rr_r0;
    const auto roots = chandrasekhar_roots(kChand, kChand);
    const BasisFamily chand{BasisKind::Chandrasekhar, kChand, kChand};

    for (double n : n_values) {
        const ProblemParams centered{a2, n, Domain::Centered};
        const ProblemParams shifted{a2, n, Domain::Shifted};
        const GalerkinPencil rr = assemble_rama_rao(centered, kCount);
        const GalerkinPencil lg = assemble_legendre(shifted, kCount);
        const double rr_r = *solve_pencil(rr).r_min;
        report.chandrasekhar_r.push_back(
            *solve_pencil(assemble_theta_eliminated(centered, roots, chand)).r_min);
        if (!rr0) {
            rr0 = rr;
            lg0 = lg;
            rr_r0 = rr_r;
            continue;
        }
        const double da = (rr.mat_a - rr0->mat_a).cwiseAbs().maxCoeff();
        const double db = (rr.mat_b - rr0->mat_b).cwiseAbs().maxCoeff();
        report.rama_rao_max_pencil_diff = std::max({report.rama_rao_max_pencil_diff, da, db});
        report.rama_rao_max_eigen_rel_diff =
            std::max(report.rama_rao_max_eigen_rel_diff, std::abs(rr_r - *rr_r0) / *rr_r0);
        const double la = (lg.mat_a - lg0->mat_a).cwiseAbs().maxCoeff();
        const double lb = (lg.mat_b - lg0->mat_b).cwiseAbs().maxCoeff();
        report.legendre_max_pencil_diff = std::max({report.legendre_max_pencil_diff, la, lb});
    }
    return report;
}

ConvergenceReport convergence_study(const ProblemParams& params, const Method& method,
                                    const std::vector<int>& truncations) {
    if (truncations.size() < 3)
        throw ContractError("convergence_study: need at least three truncations");
    for (std::size_t i = 1; i < truncations.size(); ++i)
        if (truncations[i] <= truncations[i - 1])
            throw ContractError("convergence_study: truncations must be increasing");

    ConvergenceReport report;
    report.params = params;
    report.method = method;
    for (int t : truncations) {
        Method m = method;
        m.truncation = t;
        m.theta_count = method.theta_count > 0 ? method.theta_count : 0;
        report.sequence.emplace_back(t, rayleigh_at(params, m));
    }
    for (std::size_t i = 1; i < report.sequence.size(); ++i)
        report.deltas.push_back(
            std::abs(report.sequence[i].second - report.sequence[i - 1].second));
    for (std::size_t i = 1; i < report.deltas.size(); ++i) {
        const double a = report.deltas[i - 1], b = report.deltas[i];
        report.estimated_rate.push_back((a > 0.0 && b > 0.0) ? std::log(b / a) : 0.0);
    }
    return report;
}

} // namespace convecta
