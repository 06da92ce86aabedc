#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qnc/boundary.hpp"
#include "qnc/state.hpp"

namespace qnc {

// Sampling laws over the physical (p, x) region.
//   uniform_pxr:    p ~ U[0,1], |x| = r sqrt(p(1-p)) with r ~ U[0,1],
//                   phase ~ U[0, 2pi)
//   uniform_purity: purity ~ U[1/2, 1], isotropic Bloch direction
enum class SampleLaw { uniform_pxr, uniform_purity };

struct SamplerConfig {
    long long n_states = 100000;
    std::uint64_t seed = 1;
    SampleLaw law = SampleLaw::uniform_pxr;
};

/// Deterministic sample of valid states: identical config -> bitwise
/// identical output.
std::vector<QubitState> sample_states(const SamplerConfig& cfg);

/// The panel's measure pair for every sampled state, in sample order.
std::vector<std::pair<double, double>> region_cloud(const SamplerConfig& cfg, Panel panel);

}  // namespace qnc
