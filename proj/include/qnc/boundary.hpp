#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qnc/measures.hpp"
#include "qnc/state.hpp"

namespace qnc {

// Measure-pair panels. Abscissa/ordinate conventions:
//   d_vs_tau  -> (D, tau)
//   np_vs_tau -> (tau, NP)
//   d_vs_np   -> (NP, D)
enum class Panel { d_vs_tau, np_vs_tau, d_vs_np };

enum class Family { pure, mixed, opt, plus };

std::string to_string(Panel panel);
std::string to_string(Family family);
Panel panel_from_string(const std::string& name);

/// (abscissa, ordinate) of one state on a panel. Depth from the closed form,
/// NP from the closed form, D from the vacuum fidelity.
std::pair<double, double> panel_measures(Panel panel, const QubitState& state);

struct CurveSample {
    double abscissa = 0.0;
    double ordinate = 0.0;
    double p = 0.0;
    double x_abs = 0.0;
};

/// Sampled boundary curve of one family on one panel. Samples are sorted by
/// abscissa (stable in the family parameter on ties), and the ordinate always
/// reproduces from (p, x_abs).
struct BoundaryCurve {
    Panel panel = Panel::d_vs_tau;
    Family family = Family::mixed;
    std::vector<CurveSample> samples;
};

struct Tau0Estimate {
    double tau0 = 0.0;
    std::pair<double, double> bracket = {0.0, 0.0};
    std::string criterion;
};

/// State maximizing NP at fixed depth tau, i.e. over p in (0, tau] with
/// |x|^2 = p - p^2/tau. Golden-section maximization with 8 multi-starts and
/// parabolic refinement; tol is the p-resolution (<= 1e-8).
QubitState optimal_state(double tau, double tol = 1e-10);

/// Critical depth: smallest tau whose NP maximizer is completely mixed
/// (|x_opt| < 1e-5), located by bisection. tol in [1e-6, 1e-3].
Tau0Estimate find_tau0(double tol = 1e-4);

/// Samples one family across its parameter range (p for pure/mixed, tau for
/// opt, tau0 at eps = 1e-6 for plus) and evaluates the panel measures.
BoundaryCurve boundary_curve(Panel panel, Family family, int n_samples);

/// The eps -> 0 approach curve of the plus family at fixed tau0, reported on
/// the D-vs-tau panel (abscissa D = eps, ordinate tau -> tau0).
BoundaryCurve plus_family_curve(double tau0_target, const std::vector<double>& eps_list);

/// Result of one verification suite; `failures` is empty when `pass`.
struct SuiteReport {
    std::string name;
    bool pass = true;
    int checks = 0;
    std::vector<std::string> failures;
};

/// Classification against the inequality chain tau >= D = CP >= NP:
/// case 1: tau = D = NP, case 2: strict chain, case 3: tau > D = NP,
/// case 4: tau = D > NP.
struct ChainReport {
    MeasureReport measures;
    int chain_case = 0;
};

/// Asserts the chain with slack 1e-9 and classifies the state. Violations
/// beyond slack throw std::runtime_error carrying the full measure dump.
ChainReport verify_inequality_chain(const QubitState& state);

/// Dephasing monotonicity at fixed p: tau and NP nonincreasing as |x|
/// decreases, D constant.
SuiteReport verify_dephasing_chain(double p, const std::vector<double>& x_grid);

/// Maximality of completely mixed states: D at fixed depth, NP at fixed
/// depth above tau0 (and the expected NP counterexample below tau0), and D
/// at fixed NP against the mixed curve D = sqrt(2 N (1+N)) - N.
SuiteReport verify_mixed_maximality();

/// The comparison states rho_0 ... rho_6 with their closed-form measures.
struct ReferenceStateRow {
    std::string name;
    QubitState state;
    double tau_expected = 0.0;
    double d_expected = 0.0;
    double np_expected = 0.0;
};

std::vector<ReferenceStateRow> reference_states();

/// Computes all four measures for rho_0 ... rho_6 and checks them against
/// the closed forms within 1e-9. A mismatch throws std::runtime_error naming
/// the state and measure.
std::vector<MeasureReport> verify_reference_measures();

/// The twelve pairwise ordering relations among rho_1 ... rho_6 (same
/// ordering, opposite ordering, and equal-vs-different cases for each
/// measure pair): the measures order states differently. Equalities within
/// 1e-9.
SuiteReport verify_ordering_relations();

}  // namespace qnc
