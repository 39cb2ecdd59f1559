#include "convecta/physics.hpp"

#include "convecta/errors.hpp"

#include <cmath>

namespace convecta {

std::string to_string(Domain d) {
    return d == Domain::Centered ? "centered" : "shifted";
}

void BasicState::validate() const {
    if (!(h > 0.0)) throw ContractError("BasicState: layer depth h must be > 0");
    if (!(k > 0.0)) throw ContractError("BasicState: conductivity k must be > 0");
}

void ProblemParams::validate() const {
    if (!(a2 > 0.0)) throw ContractError("ProblemParams: a2 must be > 0");
    if (!std::isfinite(n_rate)) throw ContractError("ProblemParams: N must be finite");
}

double basic_temperature(const BasicState& state, double z) {
    state.validate();
    const double half = 0.5 * state.h;
    if (z < -half || z > half)
        throw std::domain_error("basic_temperature: z outside the layer [-h/2, h/2]");
    // Ordered so the boundary identities are exact: (z + h/2)/h is exactly 0
    // at z = -h/2 and exactly 1 at z = +h/2, and z*z - (h/2)^2 is exactly 0
    // at both walls.
    const double lin = state.delta_theta * ((z + half) / state.h);
    const double quad = state.eta / (2.0 * state.k) * (z * z - half * half);
    return state.theta_b0 - lin + quad;
}

double heat_profile(const ProblemParams& params, double s) {
    params.validate();
    if (params.domain == Domain::Centered) {
        if (s < -0.5 || s > 0.5)
            throw std::domain_error("heat_profile: s outside [-1/2, 1/2]");
        return 1.0 - params.n_rate * s;
    }
    if (s < 0.0 || s > 1.0)
        throw std::domain_error("heat_profile: s outside [0, 1]");
    return params.n1() - params.n_rate * s;
}

} // namespace convecta
