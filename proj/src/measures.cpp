#include "qnc/measures.hpp"

#include <cmath>

#include "qnc/distance.hpp"
#include "qnc/entanglement.hpp"
#include "qnc/qpd.hpp"

namespace qnc {

MeasureReport measure_state(const QubitState& state) {
    MeasureReport r;
    r.state = state;
    r.tau = depth_analytic(state).tau;
    r.distance = nonclassical_distance(state);
    r.concurrence_potential = concurrence_potential(state);

    const TwoQubitState out = bs_output(state);
    const double np_spectral = negativity_spectral(out).value;
    const double np_moments = negativity_moments(out).value;
    const double np_closed = negativity_potential_closed(state);
    const double cp_wootters = concurrence(out).value;

    r.negativity_potential = np_spectral;
    r.cross_check_residuals["np_closed_minus_spectral"] = np_closed - np_spectral;
    r.cross_check_residuals["np_moments_minus_spectral"] = np_moments - np_spectral;
    r.cross_check_residuals["cp_wootters_minus_p"] = cp_wootters - state.p;
    r.cross_check_residuals["d_minus_cp"] = r.distance - r.concurrence_potential;
    return r;
}

}  // namespace qnc
