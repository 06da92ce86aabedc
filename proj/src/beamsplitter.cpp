#include "qnc/beamsplitter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnc {

double BsParams::transmittance() const {
    const double c = std::cos(t / 2.0);
    return c * c;
}

double BsParams::reflectance() const {
    const double s = std::sin(t / 2.0);
    return s * s;
}

BsParams BsParams::balanced() { return BsParams{std::numbers::pi / 2.0}; }

Eigen::Matrix4cd bs_unitary(const BsParams& params) {
    const double c = std::cos(params.t / 2.0);
    const double s = std::sin(params.t / 2.0);
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
    u(1, 1) = c;
    u(2, 2) = c;
    u(1, 2) = complexd{0.0, -s};
    u(2, 1) = complexd{0.0, -s};
    return u;
}

TwoQubitState bs_output(const QubitState& state, const BsParams& params) {
    // Input rho x |0><0| in the |00>,|01>,|10>,|11> ordering: the qubit mode
    // is the first slot, so its entries land at indices {0, 2}.
    Eigen::Matrix4cd in = Eigen::Matrix4cd::Zero();
    in(0, 0) = state.rho00();
    in(0, 2) = state.x;
    in(2, 0) = std::conj(state.x);
    in(2, 2) = state.rho11();

    const Eigen::Matrix4cd u = bs_unitary(params);
    Eigen::Matrix4cd out = u * in * u.adjoint();
    out = 0.5 * (out + out.adjoint().eval());  // scrub roundoff asymmetry
    return TwoQubitState{out};
}

TwoQubitPure bs_output_pure(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("bs_output_pure: p must be in [0,1]");
    TwoQubitPure out;
    out.amps(0) = std::sqrt(1.0 - p);
    out.amps(1) = complexd{0.0, -std::sqrt(p / 2.0)};
    out.amps(2) = std::sqrt(p / 2.0);
    out.amps(3) = 0.0;
    return out;
}

}  // namespace qnc
