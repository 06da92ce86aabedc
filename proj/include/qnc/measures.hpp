#pragma once

#include "qnc/state.hpp"

namespace qnc {

/// Evaluates all four measures of a state (depth via the closed form, NP via
/// the spectral route) together with cross-check residuals:
///   np_closed_minus_spectral, np_moments_minus_spectral,
///   cp_wootters_minus_p, d_minus_cp.
MeasureReport measure_state(const QubitState& state);

}  // namespace qnc
