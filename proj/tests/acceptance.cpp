// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance and runtime budget is pinned in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qnc/boundary.hpp"
#include "qnc/distance.hpp"
#include "qnc/entanglement.hpp"
#include "qnc/measures.hpp"
#include "qnc/montecarlo.hpp"
#include "qnc/qpd.hpp"
#include "qnc/state.hpp"

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

class Criterion {
  public:
    explicit Criterion(std::string name, double budget_seconds)
        : name_(std::move(name)), budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}

    void finish(bool pass, const std::string& detail) {
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const bool in_budget = seconds < budget_;
        const bool ok = pass && in_budget;
        std::printf("[%s] %s (%s; %.2f s of %.0f s budget)\n", ok ? "PASS" : "FAIL", name_.c_str(),
                    detail.c_str(), seconds, budget_);
        if (!ok) ++failures;
    }

  private:
    std::string name_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double mixed_np(double p) { return std::sqrt((1.0 - p) * (1.0 - p) + p * p) - (1.0 - p); }

void criterion_1_reference_measures() {
    Criterion c("1. reference-state closed forms within 1e-9", 1.0);
    double worst = 0.0;
    bool pass = true;
    std::string detail;
    try {
        for (const auto& row : qnc::reference_states()) {
            const auto m = qnc::measure_state(row.state);
            worst = std::max({worst, std::abs(m.tau - row.tau_expected),
                              std::abs(m.distance - row.d_expected),
                              std::abs(m.concurrence_potential - row.d_expected),
                              std::abs(m.negativity_potential - row.np_expected),
                              std::abs(qnc::negativity_potential_closed(row.state) - row.np_expected)});
        }
        pass = worst <= 1e-9;
        detail = "max residual " + fmt(worst);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    c.finish(pass, detail);
}

void criterion_2_chain_cases() {
    Criterion c("2. chain case classification", 1.0);
    bool pass = true;
    std::string detail = "7 states classified";
    const std::vector<std::pair<qnc::QubitState, int>> cases = {
        {qnc::make_state(0.0, 0.0), 1},
        {qnc::make_state(1.0, 0.0), 1},
        {qnc::make_state(0.5, 0.25), 2},
        {qnc::family_state(qnc::Pure{0.3}), 3},
        {qnc::family_state(qnc::Pure{0.7}), 3},
        {qnc::family_state(qnc::Mixed{0.3}), 4},
        {qnc::family_state(qnc::Mixed{0.7}), 4},
    };
    try {
        for (const auto& [state, expected] : cases) {
            const int got = qnc::verify_inequality_chain(state).chain_case;
            if (got != expected) {
                pass = false;
                detail = "state p=" + fmt(state.p) + " got case " + std::to_string(got) +
                         ", expected " + std::to_string(expected);
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    c.finish(pass, detail);
}

void criterion_3_ordering_relations() {
    Criterion c("3. pairwise ordering relations", 1.0);
    const auto rep = qnc::verify_ordering_relations();
    c.finish(rep.pass, rep.pass ? "12/12 rows hold" : rep.failures.front());
}

void criterion_4_tau0() {
    Criterion c("4. critical depth tau0 = 0.3154 +- 5e-4", 60.0);
    const auto est = qnc::find_tau0(1e-4);
    const double err = std::abs(est.tau0 - 0.3154);
    c.finish(err <= 5e-4, "tau0 = " + fmt(est.tau0) + ", |err| = " + fmt(err));
}

void criterion_5_np_grid() {
    Criterion c("5. closed-form vs spectral NP on a 200x200 grid", 60.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double p = i / 199.0;
        const double cap = std::sqrt(p * (1.0 - p));
        for (int j = 0; j < 200; ++j) {
            const auto st = qnc::make_state(p, cap * j / 199.0);
            worst = std::max(worst, std::abs(qnc::negativity_potential_closed(st) -
                                             qnc::negativity_spectral(qnc::bs_output(st)).value));
        }
    }

    // The quoted special state must agree across all three routes.
    const auto special = qnc::make_state(0.125, 0.25);
    const double reference =
        0.25 * std::sqrt(26.0) * std::cos((pi - std::atan(std::sqrt(38.0) / 66.0)) / 3.0) - 0.625;
    double route_worst = 0.0;
    for (const auto method : {qnc::NegativityMethod::spectral, qnc::NegativityMethod::moments,
                              qnc::NegativityMethod::closed_form}) {
        route_worst = std::max(route_worst, std::abs(qnc::negativity_potential(special, method) - reference));
    }
    c.finish(worst <= 1e-8 && route_worst <= 1e-9,
             "grid max " + fmt(worst) + ", special-state routes max " + fmt(route_worst));
}

void criterion_6_moment_oracle() {
    Criterion c("6. moment-quartic vs spectral negativity on 1e3 outputs", 10.0);
    const auto states = qnc::sample_states({1000, 20240601, qnc::SampleLaw::uniform_pxr});
    double worst = 0.0;
    std::string detail;
    bool pass = true;
    try {
        for (const auto& st : states) {
            const auto out = qnc::bs_output(st);
            worst = std::max(worst,
                             std::abs(qnc::negativity_moments(out).value - qnc::negativity_spectral(out).value));
        }
        pass = worst <= 1e-8;
        detail = "max |diff| = " + fmt(worst);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    c.finish(pass, detail);
}

void criterion_7_depth_oracle() {
    Criterion c("7. bisection depth vs closed form on 100 states", 120.0);
    const auto states = qnc::sample_states({100, 20240602, qnc::SampleLaw::uniform_pxr});
    double worst = 0.0;
    std::string detail;
    bool pass = true;
    try {
        for (const auto& st : states) {
            worst = std::max(worst, std::abs(qnc::depth_numeric(st).tau - qnc::depth_analytic(st).tau));
        }
        pass = worst <= 1e-4;
        detail = "max |diff| = " + fmt(worst);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    c.finish(pass, detail);
}

void criterion_8_chain(const std::vector<qnc::QubitState>& cloud) {
    Criterion c("8. inequality chain on the seeded 1e5 cloud", 60.0);
    constexpr double slack = 1e-9;
    long long violations = 0;
    for (const auto& st : cloud) {
        const double tau = qnc::depth_analytic(st).tau;
        const double d = qnc::nonclassical_distance(st);
        const double cp = qnc::concurrence_potential(st);
        const double np = qnc::negativity_potential_closed(st);
        const bool ok = tau >= d - slack && std::abs(d - cp) <= slack && cp >= np - slack &&
                        np >= -slack && tau <= 1.0 + slack;
        if (!ok) ++violations;
    }
    c.finish(violations == 0, std::to_string(violations) + " violations");
}

void criterion_9_boundaries(const std::vector<qnc::QubitState>& cloud) {
    Criterion c("9. boundary containment and rho_opt margin", 120.0);
    const double tau0 = qnc::find_tau0(1e-4).tau0;
    long long violations = 0;

    for (const auto& st : cloud) {
        const double tau = qnc::depth_analytic(st).tau;
        const double d = qnc::nonclassical_distance(st);
        const double np = qnc::negativity_potential_closed(st);

        // (1) D-tau panel: nothing above the mixed diagonal.
        if (d > tau + 1e-9) ++violations;

        // (2) NP-tau panel: mixed bound above tau0, optimizer bound below.
        if (tau >= tau0 + 1e-3) {
            if (np > mixed_np(tau) + 1e-9) ++violations;
        } else if (tau > 1e-6) {
            const double bound = qnc::negativity_potential_closed(qnc::optimal_state(tau));
            if (np > bound + 1e-9) ++violations;
        }

        // (3) D-NP panel: between the pure diagonal and the mixed curve.
        // The mixed curve is saturated by near-mixed states and amplifies NP
        // error by 1/p near the origin, so this bound uses the spectral
        // route, which carries no cancellation there.
        const double np_spectral = qnc::negativity_spectral(qnc::bs_output(st)).value;
        if (np_spectral > d + 1e-9) ++violations;
        if (d > std::sqrt(2.0 * np_spectral * (1.0 + np_spectral)) - np_spectral + 1e-9) ++violations;
    }

    // Fig. 2(a): strictly better-than-mixed NP below tau0.
    double min_margin = 1.0;
    for (int i = 0; i <= 30; ++i) {
        const double tau = 0.05 + (tau0 - 0.01 - 0.05) * i / 30.0;
        const double margin = qnc::negativity_potential_closed(qnc::optimal_state(tau)) - mixed_np(tau);
        min_margin = std::min(min_margin, margin);
    }

    c.finish(violations == 0 && min_margin > 0.0,
             std::to_string(violations) + " violations, min rho_opt margin " + fmt(min_margin));
}

void criterion_10_d_equals_cp() {
    Criterion c("10. D = CP identity on 1e4 states", 60.0);
    const auto states = qnc::sample_states({10000, 20240603, qnc::SampleLaw::uniform_pxr});
    double worst = 0.0;
    for (const auto& st : states) {
        worst = std::max(worst, std::abs(qnc::nonclassical_distance(st) - qnc::concurrence_potential(st)));
    }
    c.finish(worst <= 1e-12, "max residual " + fmt(worst));
}

void criterion_11_convolution() {
    Criterion c("11. Wigner-to-Husimi convolution sup-norm 1e-3", 30.0);
    const qnc::GridSpec grid{4.0, 81};
    double worst = 0.0;
    std::string detail;
    bool pass = true;
    try {
        for (const auto& st : {qnc::make_state(0.0, 0.0), qnc::family_state(qnc::Mixed{0.5}),
                               qnc::family_state(qnc::Pure{0.5})}) {
            const auto predicted = qnc::convolve_qpd(st, 0.0, -1.0, grid);
            const auto direct = qnc::qpd_grid(st, -1.0, grid);
            for (std::size_t i = 0; i < predicted.values.size(); ++i) {
                worst = std::max(worst, std::abs(predicted.values[i] - direct.values[i]));
            }
        }
        pass = worst <= 1e-3;
        detail = "sup-norm " + fmt(worst);
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    c.finish(pass, detail);
}

}  // namespace

int main() {
    criterion_1_reference_measures();
    criterion_2_chain_cases();
    criterion_3_ordering_relations();
    criterion_4_tau0();
    criterion_5_np_grid();
    criterion_6_moment_oracle();
    criterion_7_depth_oracle();

    const auto cloud = qnc::sample_states({100000, 20240604, qnc::SampleLaw::uniform_pxr});
    criterion_8_chain(cloud);
    criterion_9_boundaries(cloud);
    criterion_10_d_equals_cp();
    criterion_11_convolution();

    if (failures == 0) {
        std::printf("acceptance: all 11 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
