#include "qnc/distance.hpp"

#include <algorithm>
#include <cmath>

namespace qnc {

double fidelity_qubit(const QubitState& a, const QubitState& b) {
    const double overlap = a.rho00() * b.rho00() + a.rho11() * b.rho11() +
                           2.0 * std::real(a.x * std::conj(b.x));
    const double ga = std::max(0.0, 1.0 - purity(a));
    const double gb = std::max(0.0, 1.0 - purity(b));
    return std::clamp(overlap + std::sqrt(ga * gb), 0.0, 1.0);
}

double bures_distance_sq(const QubitState& a, const QubitState& b) {
    return 2.0 * (1.0 - std::sqrt(fidelity_qubit(a, b)));
}

double nonclassical_distance(const QubitState& state) {
    // F(rho, |0><0|) = rho00 exactly (the vacuum is pure, so the sqrt term
    // vanishes); D = 1 - F = p, independent of x.
    return 1.0 - fidelity_qubit(state, QubitState{});
}

double nonclassical_distance_bures(const QubitState& state) {
    return 1.0 - std::sqrt(fidelity_qubit(state, QubitState{}));
}

}  // namespace qnc
