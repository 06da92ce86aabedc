#pragma once

#include <complex>
#include <map>
#include <string>
#include <variant>

#include <Eigen/Dense>

namespace qnc {

using complexd = std::complex<double>;

// Positive-semidefiniteness slack on |x|^2 <= p(1-p). Values inside the slack
// are clamped onto the physical boundary instead of rejected, so that states
// reconstructed from measure values survive the round trip.
inline constexpr double psd_slack = 1e-12;

/// Single-qubit density matrix in the {|0>, |1>} Fock basis,
///
///   rho(p, x) = [[1-p, x], [conj(x), p]],
///
/// with p = <1|rho|1> in [0,1] and coherence x = <0|rho|1>,
/// |x|^2 <= p(1-p). Trace and Hermiticity hold by construction.
struct QubitState {
    double p = 0.0;
    complexd x = {0.0, 0.0};

    double rho00() const { return 1.0 - p; }
    double rho11() const { return p; }
    complexd rho01() const { return x; }

    Eigen::Matrix2cd matrix() const;
};

/// Validating constructor. Clamps |x|^2 onto p(1-p) when the excess is within
/// psd_slack; throws std::invalid_argument for parameters that violate
/// positivity (or p outside [0,1]) beyond the slack.
QubitState make_state(double p, complexd x);

/// Tr rho^2, in [1/2, 1].
double purity(const QubitState& s);

// Named single-qubit families used for boundary curves and comparisons.
struct Pure    { double p;    };                  // x = sqrt(p(1-p))
struct Mixed   { double p;    };                  // x = 0
struct Opt     { double tau;  };                  // max-NP state at fixed depth
struct Plus    { double tau0; double eps = 1e-6; };  // finite-eps stand-in for p -> 0+
struct General { double p;    complexd x; };

using StateFamily = std::variant<Pure, Mixed, Opt, Plus, General>;

/// Concrete state for a family member. Plus(tau0, eps) carries the coherence
/// x0 = sqrt((1 + eps - eps/tau0) eps (1-eps)); Opt(tau) delegates to the
/// boundary optimizer.
QubitState family_state(const StateFamily& family);

/// Inverts a (distance, depth) pair into the state with real nonnegative
/// coherence: p = d, x = sqrt(d - d^2/tau). Requires tau in (0,1] and
/// d in [0, tau]; d > tau has no physical preimage and is rejected.
QubitState from_measures_d_tau(double d, double tau);

/// The four measures of one state plus cross-check residuals keyed by name.
struct MeasureReport {
    QubitState state;
    double tau = 0.0;
    double distance = 0.0;
    double concurrence_potential = 0.0;
    double negativity_potential = 0.0;
    std::map<std::string, double> cross_check_residuals;
};

}  // namespace qnc
