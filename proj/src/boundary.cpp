#include "qnc/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qnc/distance.hpp"
#include "qnc/entanglement.hpp"
#include "qnc/qpd.hpp"

namespace qnc {

std::string to_string(Panel panel) {
    switch (panel) {
        case Panel::d_vs_tau: return "d-tau";
        case Panel::np_vs_tau: return "np-tau";
        case Panel::d_vs_np: return "d-np";
    }
    return "?";
}

std::string to_string(Family family) {
    switch (family) {
        case Family::pure: return "pure";
        case Family::mixed: return "mixed";
        case Family::opt: return "opt";
        case Family::plus: return "plus";
    }
    return "?";
}

Panel panel_from_string(const std::string& name) {
    if (name == "d-tau") return Panel::d_vs_tau;
    if (name == "np-tau") return Panel::np_vs_tau;
    if (name == "d-np") return Panel::d_vs_np;
    throw std::invalid_argument("unknown panel '" + name + "' (expected d-tau, np-tau or d-np)");
}

std::pair<double, double> panel_measures(Panel panel, const QubitState& state) {
    switch (panel) {
        case Panel::d_vs_tau:
            return {nonclassical_distance(state), depth_analytic(state).tau};
        case Panel::np_vs_tau:
            return {depth_analytic(state).tau, negativity_potential_closed(state)};
        case Panel::d_vs_np:
            return {negativity_potential_closed(state), nonclassical_distance(state)};
    }
    throw std::invalid_argument("unknown panel tag");
}

namespace {

// NP along the fixed-depth constraint |x|^2 = p - p^2/tau.
QubitState constrained_state(double p, double tau) {
    const double xx = std::max(p - p * p / tau, 0.0);
    return make_state(p, std::sqrt(xx));
}

double np_on_constraint(double p, double tau) {
    return negativity_potential_closed(constrained_state(p, tau));
}

// Golden-section maximization over [a, b] to a p-resolution of tol.
double golden_max(const std::function<double(double)>& f, double a, double b, double tol, double& fbest) {
    constexpr double gr = 0.6180339887498949;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        }
    }
    const double mid = 0.5 * (a + b);
    fbest = f(mid);
    return mid;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

double mixed_np(double p) {
    return std::sqrt((1.0 - p) * (1.0 - p) + p * p) - (1.0 - p);
}

void fail(SuiteReport& rep, const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
}

std::string dump_measures(const MeasureReport& m) {
    std::ostringstream os;
    os.precision(17);
    os << "state(p=" << m.state.p << ", |x|=" << std::abs(m.state.x) << "): tau=" << m.tau
       << " D=" << m.distance << " CP=" << m.concurrence_potential << " NP=" << m.negativity_potential;
    return os.str();
}

}  // namespace

QubitState optimal_state(double tau, double tol) {
    if (!(tau > 0.0) || tau > 1.0) throw std::invalid_argument("optimal_state: tau must lie in (0,1]");
    if (!(tol > 0.0) || tol > 1e-8) throw std::invalid_argument("optimal_state: tol must lie in (0, 1e-8]");

    auto np = [&](double p) { return np_on_constraint(p, tau); };

    // Feasibility: |x|^2 = p - p^2/tau needs p <= tau; |x|^2 <= p(1-p) holds
    // automatically for tau <= 1. Multi-start over 8 segments of (0, tau].
    double best_p = tau;
    double best_np = np(tau);
    for (int seg = 0; seg < 8; ++seg) {
        const double a = tau * seg / 8.0;
        const double b = tau * (seg + 1) / 8.0;
        double f = 0.0;
        const double p = golden_max(np, a, b, tol, f);
        if (f > best_np) {
            best_np = f;
            best_p = p;
        }
    }

    // One parabolic interpolation step around the incumbent.
    {
        const double h = std::max(tol, 1e-12);
        const double p0 = std::clamp(best_p - h, 0.0, tau);
        const double p2 = std::clamp(best_p + h, 0.0, tau);
        const double f0 = np(p0), f1 = best_np, f2 = np(p2);
        const double denom = (f0 - 2.0 * f1 + f2);
        if (denom < 0.0) {
            const double step = 0.5 * h * (f0 - f2) / denom;
            const double pv = std::clamp(best_p + step, 0.0, tau);
            const double fv = np(pv);
            if (fv > best_np) {
                best_np = fv;
                best_p = pv;
            }
        }
    }

    // The p = tau endpoint is the completely mixed state; prefer it exactly
    // whenever the interior search cannot beat it.
    if (np(tau) >= best_np - 1e-12) return make_state(tau, 0.0);
    return constrained_state(best_p, tau);
}

Tau0Estimate find_tau0(double tol) {
    if (!(tol >= 1e-6 && tol <= 1e-3)) throw std::invalid_argument("find_tau0: tol must lie in [1e-6, 1e-3]");

    auto is_mixed = [](double tau) { return std::abs(optimal_state(tau, 1e-10).x) < 1e-5; };

    double lo = 0.25;
    double hi = 0.40;
    int guard = 0;
    while (is_mixed(lo)) {
        lo -= 0.05;
        if (lo < 0.02 || ++guard > 8) throw std::runtime_error("find_tau0: failed to bracket the transition from below");
    }
    guard = 0;
    while (!is_mixed(hi)) {
        hi += 0.05;
        if (hi > 0.99 || ++guard > 14) throw std::runtime_error("find_tau0: failed to bracket the transition from above");
    }

    const double width = std::min(tol, 1e-4);
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (is_mixed(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return Tau0Estimate{0.5 * (lo + hi), {lo, hi}, "smallest tau whose NP maximizer has |x_opt| < 1e-5"};
}

BoundaryCurve boundary_curve(Panel panel, Family family, int n_samples) {
    if (n_samples < 2) throw std::invalid_argument("boundary_curve: need at least 2 samples");

    std::vector<QubitState> states;
    states.reserve(static_cast<std::size_t>(n_samples));

    switch (family) {
        case Family::pure:
            for (double p : linspace(0.0, 1.0, n_samples)) states.push_back(family_state(Pure{p}));
            break;
        case Family::mixed:
            for (double p : linspace(0.0, 1.0, n_samples)) states.push_back(family_state(Mixed{p}));
            break;
        case Family::opt: {
            const double tau0 = find_tau0(1e-4).tau0;
            const auto base = linspace(1.0 / n_samples, 1.0, n_samples);
            std::vector<double> taus;
            for (std::size_t i = 0; i < base.size(); ++i) {
                taus.push_back(base[i]);
                // x4 density around the kink at tau0.
                if (i + 1 < base.size() && std::abs(base[i] - tau0) < 0.05) {
                    const double step = (base[i + 1] - base[i]) / 4.0;
                    taus.push_back(base[i] + step);
                    taus.push_back(base[i] + 2.0 * step);
                    taus.push_back(base[i] + 3.0 * step);
                }
            }
            for (double tau : taus) states.push_back(optimal_state(tau));
            break;
        }
        case Family::plus:
            for (double tau0 : linspace(1.0 / n_samples, 1.0, n_samples)) {
                states.push_back(family_state(Plus{tau0, 1e-6}));
            }
            break;
        default:
            throw std::invalid_argument("boundary_curve: unknown family tag");
    }

    BoundaryCurve curve{panel, family, {}};
    curve.samples.reserve(states.size());
    for (const auto& st : states) {
        const auto [abscissa, ordinate] = panel_measures(panel, st);
        curve.samples.push_back({abscissa, ordinate, st.p, std::abs(st.x)});
    }
    std::stable_sort(curve.samples.begin(), curve.samples.end(),
                     [](const CurveSample& a, const CurveSample& b) { return a.abscissa < b.abscissa; });
    curve.samples.erase(std::unique(curve.samples.begin(), curve.samples.end(),
                                    [](const CurveSample& a, const CurveSample& b) {
                                        return a.abscissa == b.abscissa && a.ordinate == b.ordinate;
                                    }),
                        curve.samples.end());
    return curve;
}

BoundaryCurve plus_family_curve(double tau0_target, const std::vector<double>& eps_list) {
    if (!(tau0_target > 0.0) || tau0_target > 1.0) {
        throw std::invalid_argument("plus_family_curve: tau0 must lie in (0,1]");
    }
    if (eps_list.empty()) throw std::invalid_argument("plus_family_curve: empty eps list");

    std::vector<double> eps = eps_list;
    std::sort(eps.begin(), eps.end());

    BoundaryCurve curve{Panel::d_vs_tau, Family::plus, {}};
    for (double e : eps) {
        const QubitState st = family_state(Plus{tau0_target, e});
        const auto [abscissa, ordinate] = panel_measures(Panel::d_vs_tau, st);
        curve.samples.push_back({abscissa, ordinate, st.p, std::abs(st.x)});
    }
    return curve;
}

ChainReport verify_inequality_chain(const QubitState& state) {
    constexpr double slack = 1e-9;
    ChainReport rep;
    rep.measures = measure_state(state);
    const double tau = rep.measures.tau;
    const double d = rep.measures.distance;
    const double cp = rep.measures.concurrence_potential;
    const double np = rep.measures.negativity_potential;

    const bool in_range = tau >= -slack && tau <= 1.0 + slack && d >= -slack && d <= 1.0 + slack &&
                          np >= -slack && np <= 1.0 + slack;
    if (!in_range || tau < d - slack || std::abs(d - cp) > slack || cp < np - slack) {
        throw std::runtime_error("inequality chain tau >= D = CP >= NP violated: " + dump_measures(rep.measures));
    }

    const bool tau_eq_d = std::abs(tau - d) <= slack;
    const bool d_eq_np = std::abs(d - np) <= slack;
    if (tau_eq_d) {
        rep.chain_case = d_eq_np ? 1 : 4;
    } else {
        rep.chain_case = d_eq_np ? 3 : 2;
    }
    return rep;
}

SuiteReport verify_dephasing_chain(double p, const std::vector<double>& x_grid) {
    SuiteReport rep{"dephasing-chain", true, 0, {}};
    if (x_grid.empty()) throw std::invalid_argument("verify_dephasing_chain: empty x grid");

    std::vector<double> xs = x_grid;
    std::sort(xs.begin(), xs.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });

    double prev_tau = 2.0;
    double prev_np = 2.0;
    for (double x : xs) {
        const QubitState st = make_state(p, x);  // throws on inadmissible x
        const double tau = depth_analytic(st).tau;
        const double np = negativity_potential_closed(st);
        const double d = nonclassical_distance(st);
        ++rep.checks;
        if (tau > prev_tau + 1e-12) {
            std::ostringstream os;
            os << "tau increased while |x| decreased at p=" << p << ", |x|=" << std::abs(x);
            fail(rep, os.str());
        }
        if (np > prev_np + 1e-12) {
            std::ostringstream os;
            os << "NP increased while |x| decreased at p=" << p << ", |x|=" << std::abs(x);
            fail(rep, os.str());
        }
        if (std::abs(d - p) > 1e-12) {
            std::ostringstream os;
            os << "D depends on x at p=" << p << ", |x|=" << std::abs(x) << ": D=" << d;
            fail(rep, os.str());
        }
        prev_tau = tau;
        prev_np = np;
    }
    return rep;
}

SuiteReport verify_mixed_maximality() {
    SuiteReport rep{"mixed-maximality", true, 0, {}};
    const double tau0 = find_tau0(1e-4).tau0;

    // D at fixed depth: the mixed state realizes D = tau, nothing exceeds it.
    for (double tau1 : linspace(0.02, 1.0, 50)) {
        for (double dp : linspace(0.0, tau1, 33)) {
            const QubitState st = from_measures_d_tau(dp, tau1);
            ++rep.checks;
            if (nonclassical_distance(st) > tau1 + 1e-9) {
                std::ostringstream os;
                os << "D above the mixed bound at tau=" << tau1 << ", D'=" << dp;
                fail(rep, os.str());
            }
        }
    }

    // NP at fixed depth, mixed maximal for tau >= tau0.
    for (double tau1 : linspace(tau0 + 1e-3, 1.0, 40)) {
        const double bound = mixed_np(tau1);
        for (double p : linspace(tau1 / 64.0, tau1, 64)) {
            ++rep.checks;
            if (np_on_constraint(p, tau1) > bound + 1e-9) {
                std::ostringstream os;
                os << "NP above the mixed bound at tau=" << tau1 << ", p=" << p;
                fail(rep, os.str());
            }
        }
    }

    // ...and provably NOT maximal below tau0.
    {
        const double tau1 = 0.2;
        ++rep.checks;
        const double np_opt = negativity_potential_closed(optimal_state(tau1));
        if (!(np_opt > mixed_np(tau1) + 1e-9)) {
            fail(rep, "expected rho_opt to exceed the mixed NP at tau=0.2, but it does not");
        }
    }

    // D at fixed NP against the mixed curve D = sqrt(2N(1+N)) - N.
    for (double p : linspace(0.0, 1.0, 81)) {
        for (double r : linspace(0.0, 1.0, 41)) {
            const QubitState st = make_state(p, r * std::sqrt(p * (1.0 - p)));
            const double np = negativity_potential_closed(st);
            const double bound = std::sqrt(2.0 * np * (1.0 + np)) - np;
            ++rep.checks;
            if (nonclassical_distance(st) > bound + 1e-9) {
                std::ostringstream os;
                os << "D above the mixed curve at fixed NP: p=" << p << ", r=" << r;
                fail(rep, os.str());
            }
        }
    }
    return rep;
}

std::vector<ReferenceStateRow> reference_states() {
    const double pi = std::numbers::pi;
    const double p2 = 0.5 * (std::sqrt(6.0) - 1.0);
    std::vector<ReferenceStateRow> rows;
    rows.push_back({"rho0", make_state(0.5, 0.25), 4.0 / 7.0, 0.5, std::cos(2.0 * pi / 9.0) - 0.5});
    rows.push_back({"rho1", make_state(1.0, 0.0), 1.0, 1.0, 1.0});
    rows.push_back({"rho2", family_state(Mixed{p2}), p2, p2, 0.5});
    rows.push_back({"rho3", family_state(Mixed{0.5}), 0.5, 0.5, 0.5 * (std::sqrt(2.0) - 1.0)});
    rows.push_back({"rho4", family_state(Pure{0.5}), 1.0, 0.5, 0.5});
    rows.push_back({"rho5", family_state(Mixed{0.8}), 0.8, 0.8, (std::sqrt(17.0) - 1.0) / 5.0});
    rows.push_back({"rho6", family_state(Mixed{0.6}), 0.6, 0.6, (std::sqrt(13.0) - 2.0) / 5.0});
    return rows;
}

std::vector<MeasureReport> verify_reference_measures() {
    constexpr double tol = 1e-9;
    std::vector<MeasureReport> reports;
    for (const auto& row : reference_states()) {
        MeasureReport m = measure_state(row.state);
        auto check = [&](const char* what, double got, double expected) {
            if (std::abs(got - expected) > tol) {
                std::ostringstream os;
                os.precision(17);
                os << "reference measure mismatch for " << row.name << " " << what << ": got " << got
                   << ", expected " << expected;
                throw std::runtime_error(os.str());
            }
        };
        check("tau", m.tau, row.tau_expected);
        check("D", m.distance, row.d_expected);
        check("CP", m.concurrence_potential, row.d_expected);
        check("NP", m.negativity_potential, row.np_expected);
        check("NP(closed)", negativity_potential_closed(row.state), row.np_expected);
        reports.push_back(std::move(m));
    }
    return reports;
}

SuiteReport verify_ordering_relations() {
    SuiteReport rep{"ordering-relations", true, 0, {}};
    const auto rows = reference_states();

    enum class M { tau, d, np };
    enum class Rel { gt, eq, lt };
    struct Row {
        int a, b;
        M m1;
        Rel r1;
        M m2;
        Rel r2;
    };
    // Row layout: measure m1 compared between rho_a and rho_b, then m2 on
    // the same pair.
    const Row relations[12] = {
        {1, 2, M::tau, Rel::gt, M::d, Rel::gt},  {1, 4, M::tau, Rel::eq, M::d, Rel::gt},
        {4, 3, M::tau, Rel::gt, M::d, Rel::eq},  {2, 4, M::tau, Rel::lt, M::d, Rel::gt},
        {1, 2, M::tau, Rel::gt, M::np, Rel::gt}, {1, 4, M::tau, Rel::eq, M::np, Rel::gt},
        {4, 2, M::tau, Rel::gt, M::np, Rel::eq}, {5, 4, M::tau, Rel::lt, M::np, Rel::gt},
        {1, 2, M::np, Rel::gt, M::d, Rel::gt},   {2, 4, M::np, Rel::eq, M::d, Rel::gt},
        {4, 3, M::np, Rel::gt, M::d, Rel::eq},   {6, 4, M::np, Rel::lt, M::d, Rel::gt},
    };

    std::vector<MeasureReport> measures;
    for (const auto& row : rows) measures.push_back(measure_state(row.state));

    auto value = [&](int idx, M m) {
        const auto& r = measures[static_cast<std::size_t>(idx)];
        switch (m) {
            case M::tau: return r.tau;
            case M::d: return r.distance;
            case M::np: return r.negativity_potential;
        }
        return 0.0;
    };
    auto holds = [](double lhs, double rhs, Rel rel) {
        switch (rel) {
            case Rel::gt: return lhs > rhs + 1e-9;
            case Rel::eq: return std::abs(lhs - rhs) <= 1e-9;
            case Rel::lt: return lhs < rhs - 1e-9;
        }
        return false;
    };

    int idx = 0;
    for (const auto& row : relations) {
        ++idx;
        ++rep.checks;
        const bool ok1 = holds(value(row.a, row.m1), value(row.b, row.m1), row.r1);
        const bool ok2 = holds(value(row.a, row.m2), value(row.b, row.m2), row.r2);
        if (!ok1 || !ok2) {
            std::ostringstream os;
            os << "ordering relation " << idx << " fails for (rho" << row.a << ", rho" << row.b << "); "
               << dump_measures(measures[static_cast<std::size_t>(row.a)]) << " vs "
               << dump_measures(measures[static_cast<std::size_t>(row.b)]);
            fail(rep, os.str());
        }
    }
    return rep;
}

}  // namespace qnc
