#include "qnc/state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qnc {

// Defined in boundary.cpp; family_state(Opt) delegates to it.
QubitState optimal_state(double tau, double tol);

Eigen::Matrix2cd QubitState::matrix() const {
    Eigen::Matrix2cd m;
    m(0, 0) = 1.0 - p;
    m(0, 1) = x;
    m(1, 0) = std::conj(x);
    m(1, 1) = p;
    return m;
}

QubitState make_state(double p, complexd x) {
    if (!std::isfinite(p) || !std::isfinite(x.real()) || !std::isfinite(x.imag())) {
        throw std::invalid_argument("make_state: non-finite parameters");
    }
    if (p < -psd_slack || p > 1.0 + psd_slack) {
        std::ostringstream msg;
        msg << "make_state: p = " << p << " outside [0,1]";
        throw std::invalid_argument(msg.str());
    }
    p = std::min(std::max(p, 0.0), 1.0);

    const double limit = p * (1.0 - p);
    const double xx = std::norm(x);
    if (xx > limit + psd_slack) {
        std::ostringstream msg;
        msg << "make_state: |x|^2 = " << xx << " exceeds p(1-p) = " << limit
            << "; density matrix not positive semidefinite";
        throw std::invalid_argument(msg.str());
    }
    if (xx > limit) {
        // Inside the slack: clamp onto the boundary, keep the phase.
        x *= std::sqrt(limit / xx);
    }
    return QubitState{p, x};
}

double purity(const QubitState& s) {
    const double q = 1.0 - s.p;
    return q * q + s.p * s.p + 2.0 * std::norm(s.x);
}

namespace {

QubitState plus_state(double tau0, double eps) {
    if (!(tau0 > 0.0) || tau0 > 1.0) {
        throw std::invalid_argument("family_state: Plus requires tau0 in (0,1]");
    }
    if (!(eps > 0.0) || eps > 1.0) {
        throw std::invalid_argument("family_state: Plus requires eps in (0,1]");
    }
    const double xx = (1.0 + eps - eps / tau0) * eps * (1.0 - eps);
    if (xx < -psd_slack) {
        throw std::invalid_argument("family_state: Plus eps too large for tau0 (x0^2 < 0)");
    }
    return make_state(eps, std::sqrt(std::max(xx, 0.0)));
}

}  // namespace

QubitState family_state(const StateFamily& family) {
    if (const auto* f = std::get_if<Pure>(&family)) {
        if (f->p < 0.0 || f->p > 1.0) {
            throw std::invalid_argument("family_state: Pure requires p in [0,1]");
        }
        return make_state(f->p, std::sqrt(f->p * (1.0 - f->p)));
    }
    if (const auto* f = std::get_if<Mixed>(&family)) {
        if (f->p < 0.0 || f->p > 1.0) {
            throw std::invalid_argument("family_state: Mixed requires p in [0,1]");
        }
        return make_state(f->p, 0.0);
    }
    if (const auto* f = std::get_if<Opt>(&family)) {
        return optimal_state(f->tau, 1e-10);
    }
    if (const auto* f = std::get_if<Plus>(&family)) {
        return plus_state(f->tau0, f->eps);
    }
    const auto& g = std::get<General>(family);
    return make_state(g.p, g.x);
}

QubitState from_measures_d_tau(double d, double tau) {
    if (!(tau > 0.0) || tau > 1.0 + psd_slack) {
        throw std::invalid_argument("from_measures_d_tau: tau must be in (0,1]");
    }
    if (d < 0.0 || d > tau + psd_slack) {
        throw std::invalid_argument("from_measures_d_tau: need 0 <= D <= tau (no such physical state)");
    }
    d = std::min(d, tau);
    const double xx = d - d * d / tau;
    return make_state(d, std::sqrt(std::max(xx, 0.0)));
}

}  // namespace qnc
