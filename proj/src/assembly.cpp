#include "convecta/assembly.hpp"

#include "convecta/errors.hpp"

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace convecta {

std::string to_string(AssemblyPath p) {
    switch (p) {
        case AssemblyPath::Coupled: return "coupled";
        case AssemblyPath::ThetaEliminated: return "theta-eliminated";
        case AssemblyPath::RamaRao: return "rama-rao";
    }
    return "?";
}

namespace {

// Natural coordinate of a family: Chandrasekhar and the weighted polynomials
// live on [-1/2, 1/2]; the shifted-Legendre and sine families on [0, 1].
// The shift has unit Jacobian, so derivatives carry over unchanged.
double to_natural(BasisKind kind, Domain domain, double s) {
    const bool natural_centered =
        kind == BasisKind::Chandrasekhar || kind == BasisKind::RamaRaoWeighted;
    if (natural_centered) return domain == Domain::Centered ? s : s - 0.5;
    return domain == Domain::Shifted ? s : s + 0.5;
}

struct RoleEval {
    int size = 0;
    std::function<double(int j, double s, int d)> eval; // s in the params domain
};

RoleEval make_w_eval(const BasisFamily& family, Domain domain,
                     const ChandrasekharRoots* roots) {
    family.validate();
    RoleEval r;
    r.size = family.size();
    switch (family.kind) {
        case BasisKind::Chandrasekhar: {
            const int ne = family.count_even;
            r.eval = [roots, ne, kind = family.kind, domain](int j, double s, int d) {
                const double x = to_natural(kind, domain, s);
                return j < ne ? eval_chandrasekhar(*roots, ChandrasekharKind::C, j + 1, x, d)
                              : eval_chandrasekhar(*roots, ChandrasekharKind::S, j - ne + 1, x, d);
            };
            return r;
        }
        case BasisKind::RamaRaoWeighted:
            r.eval = [kind = family.kind, domain](int j, double s, int d) {
                return eval_rama_rao(RamaRaoKind::h1, j, to_natural(kind, domain, s), d);
            };
            return r;
        case BasisKind::ShiftedLegendreIntegrated:
            r.eval = [kind = family.kind, domain](int j, double s, int d) {
                return eval_legendre_integrated(LegendreKind::beta, j + 1,
                                                to_natural(kind, domain, s), d);
            };
            return r;
        case BasisKind::SineDirichlet:
            throw ContractError("assemble: the sine family does not satisfy the clamped "
                                "W = DW = 0 conditions and cannot serve as a W family");
    }
    throw ContractError("assemble: unknown W family kind");
}

RoleEval make_theta_eval(const BasisFamily& family, Domain domain) {
    family.validate();
    RoleEval r;
    r.size = family.size();
    switch (family.kind) {
        case BasisKind::SineDirichlet:
            r.eval = [kind = family.kind, domain](int j, double s, int d) {
                return eval_sine_dirichlet(j + 1, to_natural(kind, domain, s), d);
            };
            return r;
        case BasisKind::RamaRaoWeighted:
            r.eval = [kind = family.kind, domain](int j, double s, int d) {
                return eval_rama_rao(RamaRaoKind::h2, j, to_natural(kind, domain, s), d);
            };
            return r;
        case BasisKind::ShiftedLegendreIntegrated:
            r.eval = [kind = family.kind, domain](int j, double s, int d) {
                return eval_legendre_integrated(LegendreKind::phi, j + 1,
                                                to_natural(kind, domain, s), d);
            };
            return r;
        case BasisKind::Chandrasekhar:
            throw ContractError("assemble: the Chandrasekhar family over-constrains Theta "
                                "(Dirichlet only is required) and is not a Theta family");
    }
    throw ContractError("assemble: unknown Theta family kind");
}

void require_finite(const GalerkinPencil& p) {
    if (!p.mat_a.allFinite() || !p.mat_b.allFinite())
        throw NumericError("assembly produced non-finite pencil entries");
}

GalerkinPencil assemble_coupled_impl(const ProblemParams& params, const BasisFamily& w_family,
                                     const BasisFamily& theta_family, AssemblyPath path,
                                     int quad_order) {
    params.validate();
    ChandrasekharRoots roots;
    if (w_family.kind == BasisKind::Chandrasekhar)
        roots = chandrasekhar_roots(w_family.count_even, w_family.count_odd);
    const RoleEval W = make_w_eval(w_family, params.domain, &roots);
    const RoleEval T = make_theta_eval(theta_family, params.domain);

    const int q = quad_order > 0 ? quad_order : default_quad_order(w_family, theta_family);
    const bool centered = params.domain == Domain::Centered;
    const QuadratureRule rule = gauss_legendre(q, centered ? -0.5 : 0.0, centered ? 0.5 : 1.0);

    const int nw = W.size, nt = T.size, m = nw + nt;
    const double a2 = params.a2;

    // Tabulate all basis values once per node.
    Eigen::MatrixXd w0(nw, q), wl4(nw, q), t0(nt, q), tl2(nt, q);
    Eigen::VectorXd g(q);
    for (int p = 0; p < q; ++p) {
        const double s = rule.nodes[p];
        g(p) = heat_profile(params, s);
        for (int j = 0; j < nw; ++j) {
            w0(j, p) = W.eval(j, s, 0);
            wl4(j, p) = W.eval(j, s, 4) - 2.0 * a2 * W.eval(j, s, 2) + a2 * a2 * w0(j, p);
        }
        for (int k = 0; k < nt; ++k) {
            t0(k, p) = T.eval(k, s, 0);
            tl2(k, p) = -T.eval(k, s, 2) + a2 * t0(k, p);
        }
    }

    GalerkinPencil pencil;
    pencil.mat_a = Eigen::MatrixXd::Zero(m, m);
    pencil.mat_b = Eigen::MatrixXd::Zero(m, m);
    auto dot = [&](const auto& rowa, const auto& rowb) {
        double s = 0.0;
        for (int p = 0; p < q; ++p) s += rule.weights[p] * rowa(p) * rowb(p);
        return s;
    };
    for (int i = 0; i < nw; ++i) {
        for (int j = 0; j < nw; ++j) pencil.mat_a(i, j) = dot(wl4.row(j), w0.row(i));
        for (int k = 0; k < nt; ++k) pencil.mat_a(i, nw + k) = -dot(t0.row(k), w0.row(i));
    }
    for (int i = 0; i < nt; ++i) {
        for (int k = 0; k < nt; ++k) pencil.mat_a(nw + i, nw + k) = dot(tl2.row(k), t0.row(i));
        for (int j = 0; j < nw; ++j) {
            double s = 0.0;
            for (int p = 0; p < q; ++p)
                s += rule.weights[p] * g(p) * w0(j, p) * t0(i, p);
            pencil.mat_b(nw + i, j) = -a2 * s;
        }
    }
    pencil.meta = {params, w_family, theta_family, path, q};
    require_finite(pencil);
    return pencil;
}

} // namespace

double ThetaParticular::particular(double x) const {
    const double f = freq;
    const double ch = std::cosh(f * x), sh = std::sinh(f * x);
    const double co = std::cos(f * x), si = std::sin(f * x);
    return hyp(0) * ch + hyp(1) * x * ch + hyp(2) * sh + hyp(3) * x * sh + trig(0) * co +
           trig(1) * x * co + trig(2) * si + trig(3) * x * si;
}

double ThetaParticular::eval(double x) const {
    return particular(x) + a_h * std::cosh(a * x) + b_h * std::sinh(a * x);
}

ThetaParticular theta_particular(const ProblemParams& params, const ChandrasekharRoots& roots,
                                 ChandrasekharKind kind, int n) {
    params.validate();
    const auto& table = (kind == ChandrasekharKind::C) ? roots.lambdas : roots.mus;
    if (n < 1 || n > static_cast<int>(table.size()))
        throw ContractError("theta_particular: mode index outside constructed count");
    const double f = table[n - 1];
    const double a2 = params.a2;
    const double nr = params.n_rate;
    if (std::abs(f * f - a2) < 1e-6)
        throw ResonanceError("theta_particular: mode frequency resonant with a^2 "
                             "(|freq^2 - a2| < 1e-6); perturb a2");

    ThetaParticular tp;
    tp.kind = kind;
    tp.freq = f;
    tp.a = std::sqrt(a2);

    // (D^2 - a^2) on span{cosh, x cosh, sinh, x sinh} and span{cos, x cos, sin, x sin}.
    const double dh = f * f - a2;
    const double dt = -(f * f + a2);
    Eigen::Matrix4d mh, mt;
    mh << dh, 0, 0, 2 * f, 0, dh, 0, 0, 0, 2 * f, dh, 0, 0, 0, 0, dh;
    mt << dt, 0, 0, 2 * f, 0, dt, 0, 0, 0, -2 * f, dt, 0, 0, 0, 0, dt;

    Eigen::Vector4d fh = Eigen::Vector4d::Zero(), ft = Eigen::Vector4d::Zero();
    if (kind == ChandrasekharKind::C) {
        const double c = std::cosh(0.5 * f), co = std::cos(0.5 * f);
        fh << -1.0 / c, nr / c, 0, 0;
        ft << 1.0 / co, -nr / co, 0, 0;
    } else {
        const double s = std::sinh(0.5 * f), si = std::sin(0.5 * f);
        fh << 0, 0, -1.0 / s, nr / s;
        ft << 0, 0, 1.0 / si, -nr / si;
    }
    tp.hyp = mh.partialPivLu().solve(fh);
    tp.trig = mt.partialPivLu().solve(ft);

    const double pp = tp.particular(0.5), pm = tp.particular(-0.5);
    tp.a_h = -(pp + pm) / (2.0 * std::cosh(0.5 * tp.a));
    tp.b_h = -(pp - pm) / (2.0 * std::sinh(0.5 * tp.a));

    // Certificate: term-wise analytic second derivative against the forcing.
    auto d2_minus_a2 = [&](double x) {
        const double ch = std::cosh(f * x), sh = std::sinh(f * x);
        const double co = std::cos(f * x), si = std::sin(f * x);
        const auto& h = tp.hyp;
        const auto& t = tp.trig;
        const double hyp2 = h(0) * f * f * ch + h(1) * (2 * f * sh + x * f * f * ch) +
                            h(2) * f * f * sh + h(3) * (2 * f * ch + x * f * f * sh);
        const double trig2 = -t(0) * f * f * co + t(1) * (-2 * f * si - x * f * f * co) -
                             t(2) * f * f * si + t(3) * (2 * f * co - x * f * f * si);
        return hyp2 + trig2 - a2 * tp.particular(x);
    };
    double scale = 0.0, worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double x = -0.5 + i / 19.0;
        double mode = (kind == ChandrasekharKind::C)
                          ? eval_chandrasekhar(roots, ChandrasekharKind::C, n, x, 0)
                          : eval_chandrasekhar(roots, ChandrasekharKind::S, n, x, 0);
        const double forcing = (nr * x - 1.0) * mode;
        worst = std::max(worst, std::abs(d2_minus_a2(x) - forcing));
        scale = std::max(scale, std::abs(forcing));
    }
    if (!(worst <= 1e-8 * std::max(scale, 1.0)))
        throw NumericError("theta_particular: ODE residual certificate failed");
    const double b0 = std::abs(tp.eval(0.5)) + std::abs(tp.eval(-0.5));
    if (!(b0 < 1e-10))
        throw NumericError("theta_particular: boundary values not closed");
    return tp;
}

GalerkinPencil assemble_coupled(const ProblemParams& params, const BasisFamily& w_family,
                                const BasisFamily& theta_family, int quad_order) {
    return assemble_coupled_impl(params, w_family, theta_family, AssemblyPath::Coupled,
                                 quad_order);
}

GalerkinPencil assemble_theta_eliminated(const ProblemParams& params,
                                         const ChandrasekharRoots& roots,
                                         const BasisFamily& family, int quad_order) {
    params.validate();
    family.validate();
    if (family.kind != BasisKind::Chandrasekhar)
        throw ContractError("assemble_theta_eliminated: requires the Chandrasekhar family");
    if (params.domain != Domain::Centered)
        throw ContractError("assemble_theta_eliminated: defined on the centered domain");
    const int ne = family.count_even, no = family.count_odd;
    if (static_cast<int>(roots.lambdas.size()) < ne || static_cast<int>(roots.mus.size()) < no)
        throw ContractError("assemble_theta_eliminated: root table smaller than the family");

    const int m = ne + no;
    const int q = quad_order > 0 ? quad_order : default_quad_order(family, family);
    const QuadratureRule rule = gauss_legendre(q, -0.5, 0.5);
    const double a2 = params.a2;

    auto mode_eval = [&](int j, double x, int d) {
        return j < ne ? eval_chandrasekhar(roots, ChandrasekharKind::C, j + 1, x, d)
                      : eval_chandrasekhar(roots, ChandrasekharKind::S, j - ne + 1, x, d);
    };

    Eigen::MatrixXd m0(m, q), ml4(m, q), psi(m, q);
    for (int j = 0; j < m; ++j) {
        const bool even = j < ne;
        const ThetaParticular tp =
            theta_particular(params, roots, even ? ChandrasekharKind::C : ChandrasekharKind::S,
                             even ? j + 1 : j - ne + 1);
        for (int p = 0; p < q; ++p) {
            const double x = rule.nodes[p];
            m0(j, p) = mode_eval(j, x, 0);
            ml4(j, p) = mode_eval(j, x, 4) - 2.0 * a2 * mode_eval(j, x, 2) + a2 * a2 * m0(j, p);
            psi(j, p) = tp.eval(x);
        }
    }

    GalerkinPencil pencil;
    pencil.mat_a = Eigen::MatrixXd::Zero(m, m);
    pencil.mat_b = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double sa = 0.0, sb = 0.0;
            for (int p = 0; p < q; ++p) {
                sa += rule.weights[p] * ml4(j, p) * m0(i, p);
                sb += rule.weights[p] * psi(j, p) * m0(i, p);
            }
            pencil.mat_a(i, j) = sa;
            pencil.mat_b(i, j) = -a2 * sb;
        }
    pencil.meta = {params, family, BasisFamily{BasisKind::SineDirichlet, 0, 0},
                   AssemblyPath::ThetaEliminated, q};
    require_finite(pencil);
    return pencil;
}

GalerkinPencil assemble_rama_rao(const ProblemParams& params, int count, int quad_order) {
    if (count < 1) throw ContractError("assemble_rama_rao: count must be >= 1");
    const BasisFamily fam{BasisKind::RamaRaoWeighted, count, 0};
    return assemble_coupled_impl(params, fam, fam, AssemblyPath::RamaRao, quad_order);
}

GalerkinPencil assemble_legendre(const ProblemParams& params, int count, int quad_order) {
    if (count < 1) throw ContractError("assemble_legendre: count must be >= 1");
    if (params.domain != Domain::Shifted)
        throw ContractError("assemble_legendre: requires the shifted domain convention");
    const BasisFamily fam{BasisKind::ShiftedLegendreIntegrated, count, 0};
    return assemble_coupled_impl(params, fam, fam, AssemblyPath::Coupled, quad_order);
}

} // namespace convecta
