#include "qnc/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qnc {

namespace {

// 53-bit uniforms straight from the engine output; std::uniform_real_distribution
// is not bit-reproducible across standard libraries, this is.
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<QubitState> sample_states(const SamplerConfig& cfg) {
    if (cfg.n_states < 1) throw std::invalid_argument("sample_states: n_states must be >= 1");

    std::mt19937_64 rng(cfg.seed);
    std::vector<QubitState> states;
    states.reserve(static_cast<std::size_t>(cfg.n_states));

    const double two_pi = 2.0 * std::numbers::pi;
    for (long long i = 0; i < cfg.n_states; ++i) {
        if (cfg.law == SampleLaw::uniform_pxr) {
            const double p = canonical(rng);
            const double r = canonical(rng);
            const double phi = two_pi * canonical(rng);
            const double mag = r * std::sqrt(p * (1.0 - p));
            states.push_back(make_state(p, std::polar(mag, phi)));
        } else {
            // Uniform purity in [1/2, 1], isotropic Bloch direction.
            const double mu = 0.5 + 0.5 * canonical(rng);
            const double blen = std::sqrt(2.0 * mu - 1.0);
            const double cos_theta = 2.0 * canonical(rng) - 1.0;
            const double phi = two_pi * canonical(rng);
            const double bz = blen * cos_theta;
            const double bperp = blen * std::sqrt(std::max(1.0 - cos_theta * cos_theta, 0.0));
            const double p = 0.5 * (1.0 - bz);
            states.push_back(make_state(p, std::polar(0.5 * bperp, -phi)));
        }
    }
    return states;
}

std::vector<std::pair<double, double>> region_cloud(const SamplerConfig& cfg, Panel panel) {
    const auto states = sample_states(cfg);
    std::vector<std::pair<double, double>> cloud;
    cloud.reserve(states.size());
    for (const auto& st : states) cloud.push_back(panel_measures(panel, st));
    return cloud;
}

}  // namespace qnc
