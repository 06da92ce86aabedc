#pragma once

#include <array>

#include <Eigen/Dense>

#include "qnc/beamsplitter.hpp"
#include "qnc/state.hpp"

namespace qnc {

enum class NegativityMethod { spectral, moments, closed_form };

struct NegativityResult {
    double value = 0.0;  // in [0,1]
    NegativityMethod method = NegativityMethod::spectral;
    double min_eigenvalue = 0.0;  // spectral path: min eig of rho^Gamma
    double pi2 = 0.0;             // moment path: Tr[(rho^Gamma)^2]
    double pi3 = 0.0;             // moment path: Tr[(rho^Gamma)^3]
};

struct ConcurrenceResult {
    double value = 0.0;                       // in [0,1]
    std::array<double, 4> lambdas = {0, 0, 0, 0};  // sorted descending
};

/// Transpose on the second qubit's indices. Hermitian, trace preserving.
Eigen::Matrix4cd partial_transpose(const TwoQubitState& rho);

/// N = max(0, -2 min eig(rho^Gamma)), the exact spectral route.
NegativityResult negativity_spectral(const TwoQubitState& rho);

/// Independent moment route: solves
///   48 det(rho^Gamma) + 3N^4 + 6N^3 - 6N^2(Pi2 - 1) - 4N(3 Pi2 - 2 Pi3 - 1) = 0
/// for its smallest nonnegative real root in [-1e-9, 1 + 1e-9]. Throws
/// std::runtime_error when no root lands in that range.
NegativityResult negativity_moments(const TwoQubitState& rho);

/// Wootters concurrence. The lambdas are the nonnegative square roots of
/// eig(rho rho~) with the spin-flip rho~ = (sigma2 x sigma2) rho* (sigma2 x
/// sigma2), computed as singular values of sqrt(rho) (sigma2 x sigma2)
/// sqrt(rho)* for accuracy near the separable boundary.
ConcurrenceResult concurrence(const TwoQubitState& rho);

/// Negativity of the balanced beam-splitter output of `state`, by the
/// requested route.
double negativity_potential(const QubitState& state, NegativityMethod method = NegativityMethod::spectral);

/// Closed form of the negativity potential,
///   NP = (1/3) [2 Re((2 sqrt(a1) + 2 a2)^(1/3)) + p - 2],
/// with principal-branch complex square and cube roots; tiny negative noise
/// is clamped to 0.
double negativity_potential_closed(const QubitState& state);

/// Concurrence potential, 1 - <00|rho_out|00> = p.
double concurrence_potential(const QubitState& state);

/// Entanglement of formation from a concurrence value:
/// E_F = h((1 + sqrt(1 - C^2))/2) with the binary entropy h.
double entanglement_of_formation(double c);

}  // namespace qnc
