#pragma once

#include <stdexcept>
#include <string>

namespace convecta {

/// Precondition or configuration violation (bad family pairing, bad grid, ...).
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// No positive real eigenvalue in the spectrum: the parameter point is outside
/// the instability regime or the truncation is too small.
struct NoOnsetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimizer landed on a bracket endpoint.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mode frequency collides with the wavenumber: |freq^2 - a^2| below the
/// guard, making the particular-solution ansatz singular. Perturb a^2.
struct ResonanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure (non-convergence, non-finite entries, broken certificate).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace convecta
