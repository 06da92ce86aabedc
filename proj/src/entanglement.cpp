#include "qnc/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qnc/quartic.hpp"

namespace qnc {

namespace {

void check_two_qubit(const TwoQubitState& state) {
    if ((state.rho - state.rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("two-qubit state must be Hermitian");
    }
    if (std::abs(state.rho.trace() - complexd{1.0, 0.0}) > 1e-10) {
        throw std::invalid_argument("two-qubit state must have unit trace");
    }
}

// Floating-point noise at the separability boundary.
double clamp_measure(double v) {
    if (v < 0.0 && v > -1e-10) return 0.0;
    if (v > 1.0 && v < 1.0 + 1e-10) return 1.0;
    return v;
}

// sigma2 x sigma2 is real symmetric: anti-diagonal (-1, 1, 1, -1).
Eigen::Matrix4cd spin_flip_kernel() {
    Eigen::Matrix4cd f = Eigen::Matrix4cd::Zero();
    f(0, 3) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    f(3, 0) = -1.0;
    return f;
}

Eigen::Matrix4cd hermitian_sqrt(const Eigen::Matrix4cd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigen-solver failed on a 4x4 Hermitian matrix");
    Eigen::Vector4d vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Eigen::Matrix4cd partial_transpose(const TwoQubitState& state) {
    check_two_qubit(state);
    Eigen::Matrix4cd g;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ap = 0; ap < 2; ++ap)
                for (int bp = 0; bp < 2; ++bp)
                    g(2 * a + b, 2 * ap + bp) = state.rho(2 * a + bp, 2 * ap + b);
    return g;
}

NegativityResult negativity_spectral(const TwoQubitState& state) {
    const Eigen::Matrix4cd pt = partial_transpose(state);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("negativity_spectral: eigen-solver did not converge");
    }
    NegativityResult r;
    r.method = NegativityMethod::spectral;
    r.min_eigenvalue = es.eigenvalues()(0);
    r.value = clamp_measure(std::max(0.0, -2.0 * r.min_eigenvalue));
    const Eigen::Vector4d ev = es.eigenvalues();
    r.pi2 = ev.array().square().sum();
    r.pi3 = ev.array().cube().sum();
    return r;
}

NegativityResult negativity_moments(const TwoQubitState& state) {
    const Eigen::Matrix4cd pt = partial_transpose(state);
    const Eigen::Matrix4cd pt2 = pt * pt;

    NegativityResult r;
    r.method = NegativityMethod::moments;
    r.pi2 = pt2.trace().real();
    r.pi3 = (pt2 * pt).trace().real();
    const double det = pt.determinant().real();

    std::array<double, 4> roots{};
    const int n = solve_quartic_real(3.0, 6.0, -6.0 * (r.pi2 - 1.0),
                                     -4.0 * (3.0 * r.pi2 - 2.0 * r.pi3 - 1.0), 48.0 * det, roots);

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        if (roots[i] < -1e-9 || roots[i] > 1.0 + 1e-9) continue;
        best = std::min(best, std::clamp(roots[i], 0.0, 1.0));
    }
    if (!std::isfinite(best)) {
        throw std::runtime_error("negativity_moments: no quartic root in [-1e-9, 1+1e-9]");
    }
    r.value = best;
    r.min_eigenvalue = -r.value / 2.0;
    return r;
}

ConcurrenceResult concurrence(const TwoQubitState& state) {
    check_two_qubit(state);
    // The Wootters lambdas are the singular values of
    // sqrt(rho) (sigma2 x sigma2) sqrt(rho)*: squaring that matrix against
    // its adjoint reproduces sqrt(rho) rho~ sqrt(rho), which shares its
    // spectrum with rho rho~. The SVD keeps full precision for the
    // near-zero lambdas that an eig(rho rho~) route would square away.
    const Eigen::Matrix4cd root = hermitian_sqrt(state.rho);
    const Eigen::Matrix4cd m = root * spin_flip_kernel() * root.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
    const Eigen::Vector4d sv = svd.singularValues();  // descending

    ConcurrenceResult r;
    for (int i = 0; i < 4; ++i) r.lambdas[i] = sv(i);
    r.value = clamp_measure(std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3)));
    return r;
}

double negativity_potential(const QubitState& state, NegativityMethod method) {
    switch (method) {
        case NegativityMethod::spectral:
            return negativity_spectral(bs_output(state)).value;
        case NegativityMethod::moments:
            return negativity_moments(bs_output(state)).value;
        case NegativityMethod::closed_form:
            return negativity_potential_closed(state);
    }
    throw std::invalid_argument("negativity_potential: unknown method");
}

double negativity_potential_closed(const QubitState& state) {
    const double p = state.p;
    const double xx = std::norm(state.x);

    const double inner = 5.0 * (p - 1.0) * p + 6.0 * xx + 2.0;
    const double a2 = 14.0 * p * p * p - 21.0 * p * p + 15.0 * p + 9.0 * (p - 2.0) * xx - 4.0;
    const complexd a1{a2 * a2 - 2.0 * inner * inner * inner, 0.0};

    const complexd base = 2.0 * std::sqrt(a1) + 2.0 * a2;
    const complexd croot = base == complexd{0.0, 0.0} ? complexd{0.0, 0.0} : std::pow(base, 1.0 / 3.0);
    return clamp_measure((2.0 * croot.real() + p - 2.0) / 3.0);
}

double concurrence_potential(const QubitState& state) {
    // 1 - <00|rho_out|00> of the balanced-splitter output, which is rho11.
    return state.p;
}

double entanglement_of_formation(double c) {
    if (!(c >= -1e-12 && c <= 1.0 + 1e-12)) {
        throw std::invalid_argument("entanglement_of_formation: concurrence must lie in [0,1]");
    }
    c = std::clamp(c, 0.0, 1.0);
    const double q = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
    auto plog2 = [](double v) { return v <= 0.0 ? 0.0 : v * std::log2(v); };
    return -plog2(q) - plog2(1.0 - q);
}

}  // namespace qnc
