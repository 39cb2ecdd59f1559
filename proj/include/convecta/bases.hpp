#pragma once

#include "convecta/quadrature.hpp"

#include <vector>

namespace convecta {

/// Trial-function constructions.
enum class BasisKind {
    RamaRaoWeighted,           // h1_m = (1-4x^2)^(m+2) for W, h2_m = (1-4x^2)^(m+1) for Theta
    Chandrasekhar,             // clamped-beam eigenfunctions C_n (even), S_n (odd)
    ShiftedLegendreIntegrated, // beta_m for W, phi_m for Theta, on [0,1]
    SineDirichlet              // sin(m*pi*z) for Theta only
};

std::string to_string(BasisKind k);

/// One trial family: which construction and how many members of each parity
/// (count_odd = 0 where parity is inapplicable).
struct BasisFamily {
    BasisKind kind;
    int count_even = 0;
    int count_odd = 0;

    int size() const { return count_even + count_odd; }
    void validate() const;
};

/// First positive roots of tanh(l/2) + tan(l/2) = 0 (lambdas, even modes) and
/// coth(m/2) - cot(m/2) = 0 (mus, odd modes).
struct ChandrasekharRoots {
    std::vector<double> lambdas;
    std::vector<double> mus;
};

/// Bracket each root near its asymptote ((2n - 1/2)pi resp. (2n + 1/2)pi) and
/// refine by bisection plus a secant polish to 1e-14.
ChandrasekharRoots chandrasekhar_roots(int count_even, int count_odd);

enum class ChandrasekharKind { C, S };

/// C_n(x) = cosh(l_n x)/cosh(l_n/2) - cos(l_n x)/cos(l_n/2) and the odd
/// S_n analogue, or derivatives 1..4 (n is 1-based). D4 C_n = l_n^4 C_n and
/// D4 S_n = m_n^4 S_n; the hyperbolic ratios switch to an exp-based form for
/// frequencies above 40 so large truncations cannot overflow.
double eval_chandrasekhar(const ChandrasekharRoots& roots, ChandrasekharKind kind, int n,
                          double x, int deriv);

enum class RamaRaoKind { h1, h2 };

/// (1-4x^2)^(m+2) (h1) or (1-4x^2)^(m+1) (h2), derivatives 0..4 in closed form.
double eval_rama_rao(RamaRaoKind kind, int m, double x, int deriv);

enum class LegendreKind { beta, phi };

/// Integrated shifted-Legendre functions on [0,1] built from Q_m(z) = P_m(2z-1):
/// phi_m = integral of Q_m from 0 to z,  beta_m = double integral of Q_{m+1}.
/// Members with m >= 1 satisfy phi_m(0) = phi_m(1) = 0 and
/// beta_m = D beta_m = 0 at z = 0, 1 (m = 0 does not and is not used as a
/// trial function). Derivatives 0..4.
double eval_legendre_integrated(LegendreKind kind, int m, double z, int deriv);

/// sin(m*pi*z) on [0,1], derivatives 0..2, m >= 1.
double eval_sine_dirichlet(int m, double z, int deriv);

/// Default over-integration order for pencils assembled from two families.
int default_quad_order(const BasisFamily& a, const BasisFamily& b);

} // namespace convecta
