#pragma once

#include <string>

namespace convecta {

/// Interval convention for the eigenproblem coordinate.
enum class Domain {
    Centered, // x in [-1/2, 1/2]
    Shifted   // z in [0, 1], z = x + 1/2
};

std::string to_string(Domain d);

/// Dimensional conduction-state parameters of the layer.
struct BasicState {
    double theta_b0;    ///< temperature at the lower boundary [K]
    double delta_theta; ///< boundary temperature difference theta_b0 - theta_b1 [K]
    double h;           ///< layer depth [m], > 0
    double eta;         ///< uniform heating rate [K*conductivity/m^2]
    double k;           ///< thermal conductivity, > 0

    void validate() const;
};

/// One eigenproblem instance: squared wavenumber, heating rate, domain convention.
/// The eigenvalue is the Rayleigh number R (the product of the Grashof and
/// Prandtl numbers); only a^2 and N enter the computation.
struct ProblemParams {
    double a2;                        ///< squared horizontal wavenumber, > 0
    double n_rate;                    ///< heating/cooling rate N (any real)
    Domain domain = Domain::Centered;

    void validate() const;
    /// N1 = 1 + N/2, the constant profile term in the shifted convention.
    double n1() const { return 1.0 + 0.5 * n_rate; }
};

/// Conduction temperature profile at height z in [-h/2, h/2].
/// theta(z) = theta_b0 - delta_theta*(z + h/2)/h + eta/(2k)*(z^2 - (h/2)^2);
/// the boundary identities theta(-h/2) = theta_b0 and
/// theta(h/2) = theta_b0 - delta_theta hold exactly.
double basic_temperature(const BasicState& state, double z);

/// Dimensionless profile g multiplying W in the temperature equation:
/// 1 - N*s (Centered) or N1 - N*s (Shifted). The two agree under s -> s + 1/2.
double heat_profile(const ProblemParams& params, double s);

} // namespace convecta
