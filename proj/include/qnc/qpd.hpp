#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qnc/state.hpp"

namespace qnc {

/// Square phase-space window |Re alpha|, |Im alpha| <= half_width sampled at
/// points_per_axis per axis.
struct GridSpec {
    double half_width = 4.0;
    int points_per_axis = 81;
};

struct QpdPoint {
    double s = 0.0;
    complexd alpha = {0.0, 0.0};
    double value = 0.0;
};

enum class DepthMethod { analytic, bisection };

struct DepthResult {
    double tau = 0.0;                    // nonclassical depth, in [0,1]
    double s0 = 1.0;                     // critical order, s0 = 1 - 2 tau
    complexd witness_alpha = {0.0, 0.0}; // argmin location (bisection path)
    DepthMethod method = DepthMethod::analytic;
};

/// Associated Laguerre polynomial L_n^k(x) via the three-term recurrence.
/// L_0^k = 1, L_1^k = 1 + k - x.
double laguerre(int n, int k, double x);

/// s-parametrized quasiprobability W^(s)(alpha) from the Fock-basis double
/// sum over the density matrix. rho must be Hermitian with unit trace and
/// dimension <= 16. s in [-1, 1): s = -1 is the Husimi function, s -> 1 (the
/// P function) is singular for number states and is rejected.
double qpd_general(const Eigen::MatrixXcd& rho, double s, complexd alpha);

/// Closed form of W^(s)(alpha) for a single-qubit state; same s domain as
/// qpd_general.
double qpd_qubit(const QubitState& state, double s, complexd alpha);

std::vector<double> grid_axis(const GridSpec& grid);

/// Grid of QPD values. values[iy * n + ix] corresponds to
/// alpha = axis[ix] + i axis[iy].
struct QpdGrid {
    GridSpec spec;
    double s = 0.0;
    std::vector<double> values;

    double value(int iy, int ix) const { return values[static_cast<std::size_t>(iy) * spec.points_per_axis + ix]; }
};

QpdGrid qpd_grid(const QubitState& state, double s, const GridSpec& grid);

/// Predicts the W^(s2) grid by convolving the W^(s1) grid with the Gaussian
/// smoothing kernel of width (s1 - s2)/2. Requires s2 < s1 and a window wide
/// enough that the truncated boundary mass is < 1e-6 of the total.
QpdGrid convolve_qpd(const QubitState& state, double s1, double s2, const GridSpec& grid);

/// Closed-form depth tau = p^2 / (p - |x|^2) for p > 0, tau = 0 for the
/// vacuum.
DepthResult depth_analytic(const QubitState& state);

/// Independent depth oracle: bisects s in [-1, 1) for the largest s whose
/// grid-minimized W^(s) stays above -tol * max|W^(s)|, with local grid
/// refinement around every candidate basin. tol in [1e-8, 1e-2].
///
/// The default window covers every state whose negativity features lie
/// within |alpha| <= half_width; near-pure states with p below ~1/half_width^2
/// put the relevant dip at |alpha| ~ 1/sqrt(p) and need a wider grid.
DepthResult depth_numeric(const QubitState& state, const GridSpec& grid = {}, double tol = 1e-8);

}  // namespace qnc
