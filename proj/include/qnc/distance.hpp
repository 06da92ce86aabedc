#pragma once

#include "qnc/state.hpp"

namespace qnc {

/// Qubit fidelity F = Tr(rho sigma) + sqrt((1 - Tr rho^2)(1 - Tr sigma^2)).
/// Symmetric, in [0,1], F(rho, rho) = 1.
double fidelity_qubit(const QubitState& a, const QubitState& b);

/// Squared Bures distance, D_B^2 = 2 (1 - sqrt(F)). In [0,2].
double bures_distance_sq(const QubitState& a, const QubitState& b);

/// Nonclassical distance to the vacuum (the only classical state in the
/// {|0>,|1>} span): D = 1 - F(rho, |0><0|) = p. Independent of x, zero only
/// for the vacuum, and equal to the concurrence potential.
double nonclassical_distance(const QubitState& state);

/// Diagnostic variant 1 - sqrt(F(rho, |0><0|)) = (1/2) D_B^2, i.e. the
/// literal half-squared-Bures reading; equals 1 - sqrt(1-p), not p.
double nonclassical_distance_bures(const QubitState& state);

}  // namespace qnc
