#include "convecta/bases.hpp"

#include "convecta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace convecta {

std::string to_string(BasisKind k) {
    switch (k) {
        case BasisKind::RamaRaoWeighted: return "rama-rao-weighted";
        case BasisKind::Chandrasekhar: return "chandrasekhar";
        case BasisKind::ShiftedLegendreIntegrated: return "shifted-legendre-integrated";
        case BasisKind::SineDirichlet: return "sine-dirichlet";
    }
    return "?";
}

void BasisFamily::validate() const {
    if (count_even < 0 || count_odd < 0 || size() < 1)
        throw ContractError("BasisFamily: needs at least one member");
}

namespace {

constexpr double kPi = 3.14159265358979323846;

double bisect_secant(double lo, double hi, double flo, const auto& f) {
    // Bisection to ~1e-12, then a few secant steps to squeeze out 1e-14.
    double a = lo, b = hi, fa = flo;
    for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    double x0 = a, x1 = b, f0 = f(x0), f1 = f(x1);
    for (int it = 0; it < 8; ++it) {
        if (f1 == f0) break;
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > lo && x2 < hi)) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
        if (std::abs(x1 - x0) < 1e-14 * std::abs(x1)) break;
    }
    return x1;
}

double solve_root(double guess, const auto& f) {
    const double pad = 1e-6; // keep the tan/cot poles at the bracket edges out
    double lo = guess - 0.5 * kPi + pad;
    double hi = guess + 0.5 * kPi - pad;
    double flo = f(lo), fhi = f(hi);
    if ((flo < 0) == (fhi < 0))
        throw NumericError("chandrasekhar_roots: bracket lost the sign change");
    return bisect_secant(lo, hi, flo, f);
}

} // namespace

ChandrasekharRoots chandrasekhar_roots(int count_even, int count_odd) {
    if (count_even < 0 || count_odd < 0 || count_even + count_odd < 1)
        throw ContractError("chandrasekhar_roots: counts must be >= 0 with at least one mode");
    ChandrasekharRoots roots;
    roots.lambdas.reserve(count_even);
    roots.mus.reserve(count_odd);
    for (int n = 1; n <= count_even; ++n) {
        const double guess = (2.0 * n - 0.5) * kPi;
        roots.lambdas.push_back(
            solve_root(guess, [](double l) { return std::tanh(0.5 * l) + std::tan(0.5 * l); }));
    }
    for (int n = 1; n <= count_odd; ++n) {
        const double guess = (2.0 * n + 0.5) * kPi;
        roots.mus.push_back(
            solve_root(guess, [](double m) { return 1.0 / std::tanh(0.5 * m) - 1.0 / std::tan(0.5 * m); }));
    }
    return roots;
}

namespace {

struct HyperbolicRatios {
    double ch; // cosh(f x)/denominator
    double sh; // sinh(f x)/denominator
};

// cosh(f x)/cosh(f/2) and sinh(f x)/cosh(f/2) (even_denom), or the
// .../sinh(f/2) pair. Above f = 40 the ratios are computed from
// exp(f(|x|-1/2)) so nothing overflows at high truncation.
HyperbolicRatios hyp_ratios(double f, double x, bool even_denom) {
    if (f <= 40.0) {
        const double den = even_denom ? std::cosh(0.5 * f) : std::sinh(0.5 * f);
        return {std::cosh(f * x) / den, std::sinh(f * x) / den};
    }
    const double ax = std::abs(x);
    const double sgn = (x < 0.0) ? -1.0 : 1.0;
    const double e = std::exp(f * (ax - 0.5));
    const double p = std::exp(-2.0 * f * ax);
    const double d = even_denom ? (1.0 + std::exp(-f)) : (1.0 - std::exp(-f));
    return {e * (1.0 + p) / d, sgn * e * (1.0 - p) / d};
}

} // namespace

double eval_chandrasekhar(const ChandrasekharRoots& roots, ChandrasekharKind kind, int n,
                          double x, int deriv) {
    if (deriv < 0 || deriv > 4)
        throw ContractError("eval_chandrasekhar: derivative order must be 0..4");
    if (std::abs(x) > 0.5 + 1e-12)
        throw std::domain_error("eval_chandrasekhar: x outside [-1/2, 1/2]");
    const auto& table = (kind == ChandrasekharKind::C) ? roots.lambdas : roots.mus;
    if (n < 1 || n > static_cast<int>(table.size()))
        throw ContractError("eval_chandrasekhar: mode index outside constructed count");
    const double f = table[n - 1];
    const double fp = std::pow(f, deriv);

    if (kind == ChandrasekharKind::C) {
        const auto [ch, sh] = hyp_ratios(f, x, true);
        const double co = std::cos(f * x) / std::cos(0.5 * f);
        const double si = std::sin(f * x) / std::cos(0.5 * f);
        switch (deriv) {
            case 0: return ch - co;
            case 1: return fp * (sh + si);
            case 2: return fp * (ch + co);
            case 3: return fp * (sh - si);
            default: return fp * (ch - co);
        }
    }
    const auto [ch, sh] = hyp_ratios(f, x, false);
    const double co = std::cos(f * x) / std::sin(0.5 * f);
    const double si = std::sin(f * x) / std::sin(0.5 * f);
    switch (deriv) {
        case 0: return sh - si;
        case 1: return fp * (ch - co);
        case 2: return fp * (sh + si);
        case 3: return fp * (ch + co);
        default: return fp * (sh - si);
    }
}

double eval_rama_rao(RamaRaoKind kind, int m, double x, int deriv) {
    if (m < 0) throw ContractError("eval_rama_rao: index must be >= 0");
    if (deriv < 0 || deriv > 4)
        throw ContractError("eval_rama_rao: derivative order must be 0..4");
    if (std::abs(x) > 0.5 + 1e-12)
        throw std::domain_error("eval_rama_rao: x outside [-1/2, 1/2]");
    const int k = (kind == RamaRaoKind::h1) ? m + 2 : m + 1;
    const double u = 1.0 - 4.0 * x * x;
    const double up = -8.0 * x;
    const double upp = -8.0;
    // Guarded power: c * u^e terms where the falling-factorial coefficient is
    // zero whenever e would be negative.
    auto term = [&](double c, int e, double mult) {
        return (c == 0.0) ? 0.0 : c * std::pow(u, e) * mult;
    };
    const double c1 = k;
    const double c2 = c1 * (k - 1);
    const double c3 = c2 * (k - 2);
    const double c4 = c3 * (k - 3);
    switch (deriv) {
        case 0: return std::pow(u, k);
        case 1: return term(c1, k - 1, up);
        case 2: return term(c2, k - 2, up * up) + term(c1, k - 1, upp);
        case 3: return term(c3, k - 3, up * up * up) + term(3.0 * c2, k - 2, up * upp);
        default:
            return term(c4, k - 4, up * up * up * up) + term(6.0 * c3, k - 3, up * up * upp) +
                   term(3.0 * c2, k - 2, upp * upp);
    }
}

namespace {

// P_m^(j)(t) for m = 0..mmax, j = 0..kmax, by upward recurrences:
//   (m+1) P_{m+1} = (2m+1) t P_m - m P_{m-1}
//   P^(j)_{m+1}   = (2m+1) P^(j-1)_m + P^(j)_{m-1}
struct LegendreTable {
    int mmax, kmax;
    std::vector<double> v; // [(kmax+1) x (mmax+1)]

    LegendreTable(double t, int mmax_, int kmax_) : mmax(mmax_), kmax(kmax_), v((kmax_ + 1) * (mmax_ + 1), 0.0) {
        at(0, 0) = 1.0;
        if (mmax >= 1) at(0, 1) = t;
        for (int m = 1; m < mmax; ++m)
            at(0, m + 1) = ((2 * m + 1) * t * at(0, m) - m * at(0, m - 1)) / (m + 1);
        for (int j = 1; j <= kmax; ++j)
            for (int m = 0; m < mmax; ++m)
                at(j, m + 1) = (2 * m + 1) * at(j - 1, m) + (m >= 1 ? at(j, m - 1) : 0.0);
    }
    double& at(int j, int m) { return v[j * (mmax + 1) + m]; }
    double get(int j, int m) const { return m < 0 ? 0.0 : v[j * (mmax + 1) + m]; }
};

} // namespace

double eval_legendre_integrated(LegendreKind kind, int m, double z, int deriv) {
    if (m < 0) throw ContractError("eval_legendre_integrated: index must be >= 0");
    if (deriv < 0 || deriv > 4)
        throw ContractError("eval_legendre_integrated: derivative order must be 0..4");
    if (z < -1e-12 || z > 1.0 + 1e-12)
        throw std::domain_error("eval_legendre_integrated: z outside [0, 1]");

    const double t = 2.0 * z - 1.0;
    const int top = (kind == LegendreKind::beta) ? m + 3 : m + 1;
    const LegendreTable tab(t, top, deriv);
    // Q_m^(j)(z) = 2^j P_m^(j)(2z - 1)
    auto Q = [&](int mm, int j) { return tab.get(j, mm) * std::ldexp(1.0, j); };
    // phi_0 = z is the exception the closed form misses.
    auto phi = [&](int mm, int j) -> double {
        if (mm == 0) return j == 0 ? z : (j == 1 ? 1.0 : 0.0);
        return (Q(mm + 1, j) - Q(mm - 1, j)) / (2.0 * (2 * mm + 1));
    };
    if (kind == LegendreKind::phi) return phi(m, deriv);
    return (phi(m + 2, deriv) - phi(m, deriv)) / (2.0 * (2 * m + 3));
}

double eval_sine_dirichlet(int m, double z, int deriv) {
    if (m < 1) throw ContractError("eval_sine_dirichlet: index must be >= 1");
    if (deriv < 0 || deriv > 2)
        throw ContractError("eval_sine_dirichlet: derivative order must be 0..2");
    if (z < -1e-12 || z > 1.0 + 1e-12)
        throw std::domain_error("eval_sine_dirichlet: z outside [0, 1]");
    const double w = m * kPi;
    switch (deriv) {
        case 0: return std::sin(w * z);
        case 1: return w * std::cos(w * z);
        default: return -w * w * std::sin(w * z);
    }
}

int default_quad_order(const BasisFamily& a, const BasisFamily& b) {
    return 4 * std::max(a.size(), b.size()) + 16;
}

} // namespace convecta
