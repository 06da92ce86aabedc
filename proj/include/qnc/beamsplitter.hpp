#pragma once

#include <Eigen/Dense>

#include "qnc/state.hpp"

namespace qnc {

/// Beam-splitter interaction time t; transmittance T = cos^2(t/2) and
/// reflectance R = sin^2(t/2). The balanced splitter is t = pi/2.
struct BsParams {
    double t = 0.0;

    double transmittance() const;
    double reflectance() const;
    static BsParams balanced();
};

/// Two-qubit density matrix in the basis |00>, |01>, |10>, |11>.
struct TwoQubitState {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
};

/// Two-qubit pure state amplitudes (c00, c01, c10, c11).
struct TwoQubitPure {
    Eigen::Vector4cd amps = Eigen::Vector4cd::Zero();

    Eigen::Matrix4cd projector() const { return amps * amps.adjoint(); }
};

/// Unitary of the beam splitter on the zero/one-photon subspace: identity on
/// |00> and |11>, the cos/-i sin block on {|01>, |10>}.
Eigen::Matrix4cd bs_unitary(const BsParams& params);

/// U (rho x |0><0|) U^dag for a single-qubit input and vacuum ancilla.
TwoQubitState bs_output(const QubitState& state, const BsParams& params = BsParams::balanced());

/// Balanced-splitter output for a pure input sqrt(1-p)|0> + sqrt(p)|1>:
/// amplitudes (sqrt(1-p), -i sqrt(p/2), sqrt(p/2), 0).
TwoQubitPure bs_output_pure(double p);

}  // namespace qnc
