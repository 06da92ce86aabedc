#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnc/boundary.hpp"
#include "qnc/distance.hpp"
#include "qnc/entanglement.hpp"
#include "qnc/io.hpp"
#include "qnc/measures.hpp"
#include "qnc/montecarlo.hpp"
#include "qnc/qpd.hpp"
#include "qnc/state.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_invalid_input = 2;
constexpr int exit_io_error = 3;

struct MeasureArgs {
    std::string family = "general";
    double p = 0.0;
    double x = 0.0;
    double phase = 0.0;
    double tau = 0.5;
    double tau0 = 0.5;
    double eps = 1e-6;
    bool as_json = false;
};

struct FiguresArgs {
    std::string panel;
    std::string out_dir = ".";
    long long n_mc = 100000;
    std::uint64_t seed = 1;
    int samples = 512;
    int precision = 6;
    double tau0_tol = 1e-4;
    std::string law = "uniform-pxr";
};

struct VerifyArgs {
    std::string suite;
    std::uint64_t seed = 1;
    double depth_tol = 1e-8;
};

struct QpdArgs {
    double p = 0.0;
    double x = 0.0;
    double phase = 0.0;
    double s = 0.0;
    double half_width = 4.0;
    int points = 81;
    int precision = 6;
    std::string out;
};

qnc::SampleLaw parse_law(const std::string& name) {
    if (name == "uniform-pxr") return qnc::SampleLaw::uniform_pxr;
    if (name == "uniform-purity") return qnc::SampleLaw::uniform_purity;
    throw std::invalid_argument("unknown sampling law '" + name + "'");
}

qnc::QubitState select_state(const MeasureArgs& args) {
    if (args.family == "general") return qnc::make_state(args.p, std::polar(args.x, args.phase));
    if (args.family == "pure") return qnc::family_state(qnc::Pure{args.p});
    if (args.family == "mixed") return qnc::family_state(qnc::Mixed{args.p});
    if (args.family == "opt") return qnc::family_state(qnc::Opt{args.tau});
    if (args.family == "plus") return qnc::family_state(qnc::Plus{args.tau0, args.eps});
    throw std::invalid_argument("unknown family '" + args.family + "'");
}

int run_measure(const MeasureArgs& args) {
    const qnc::QubitState state = select_state(args);
    const qnc::MeasureReport report = qnc::measure_state(state);

    if (args.as_json) {
        json j;
        j["p"] = state.p;
        j["x_abs"] = std::abs(state.x);
        j["phase"] = std::arg(state.x);
        j["tau"] = report.tau;
        j["distance"] = report.distance;
        j["concurrence_potential"] = report.concurrence_potential;
        j["negativity_potential"] = report.negativity_potential;
        j["cross_check_residuals"] = report.cross_check_residuals;
        std::printf("%s\n", j.dump(2).c_str());
        return exit_ok;
    }

    std::printf("p                     = %.15g\n", state.p);
    std::printf("|x|                   = %.15g\n", std::abs(state.x));
    std::printf("tau                   = %.15g\n", report.tau);
    std::printf("distance              = %.15g\n", report.distance);
    std::printf("concurrence_potential = %.15g\n", report.concurrence_potential);
    std::printf("negativity_potential  = %.15g\n", report.negativity_potential);
    for (const auto& [name, value] : report.cross_check_residuals) {
        std::printf("residual %-28s = %.3g\n", name.c_str(), value);
    }
    return exit_ok;
}

int run_figures(const FiguresArgs& args) {
    const qnc::Panel panel = qnc::panel_from_string(args.panel);
    const qnc::SampleLaw law = parse_law(args.law);
    const std::filesystem::path dir(args.out_dir);
    std::filesystem::create_directories(dir);

    json manifest;
    manifest["command"] = "figures";
    manifest["panel"] = qnc::to_string(panel);
    manifest["seed"] = args.seed;
    manifest["n_mc"] = args.n_mc;
    manifest["boundary_samples"] = args.samples;
    manifest["law"] = args.law;
    manifest["precision"] = args.precision;
    manifest["tolerances"] = {{"chain_slack", 1e-9},     {"reference_equality", 1e-9},
                              {"np_route_agreement", 1e-8}, {"depth_oracle", 1e-4},
                              {"curve_recompute", 1e-10}};
    std::vector<std::string> files;

    const std::vector<std::string> header = {"abscissa", "ordinate", "p", "x_abs"};

    // Monte Carlo cloud.
    {
        const auto states = qnc::sample_states({args.n_mc, args.seed, law});
        std::vector<std::vector<double>> rows;
        rows.reserve(states.size());
        for (const auto& st : states) {
            const auto [a, o] = qnc::panel_measures(panel, st);
            rows.push_back({a, o, st.p, std::abs(st.x)});
        }
        qnc::atomic_write(dir / "cloud.csv", qnc::csv_table(header, rows, args.precision));
        files.push_back("cloud.csv");
    }

    // Boundary families shown on this panel.
    std::vector<qnc::Family> families = {qnc::Family::pure, qnc::Family::mixed};
    if (panel == qnc::Panel::np_vs_tau) families.push_back(qnc::Family::opt);
    if (panel != qnc::Panel::d_vs_np) families.push_back(qnc::Family::plus);

    for (const auto family : families) {
        const qnc::BoundaryCurve curve = qnc::boundary_curve(panel, family, args.samples);
        std::vector<std::vector<double>> rows;
        rows.reserve(curve.samples.size());
        for (const auto& s : curve.samples) rows.push_back({s.abscissa, s.ordinate, s.p, s.x_abs});
        const std::string name = "boundary_" + qnc::to_string(family) + ".csv";
        qnc::atomic_write(dir / name, qnc::csv_table(header, rows, args.precision));
        files.push_back(name);
    }

    if (panel == qnc::Panel::np_vs_tau) {
        const qnc::Tau0Estimate tau0 = qnc::find_tau0(args.tau0_tol);
        manifest["tau0"] = {{"value", tau0.tau0},
                            {"bracket", {tau0.bracket.first, tau0.bracket.second}},
                            {"criterion", tau0.criterion}};
    }

    manifest["files"] = files;
    qnc::atomic_write(dir / "manifest.json", manifest.dump(2) + "\n");
    std::printf("wrote %zu files to %s\n", files.size() + 1, dir.string().c_str());
    return exit_ok;
}

int run_qpd(const QpdArgs& args) {
    const qnc::QubitState state = qnc::make_state(args.p, std::polar(args.x, args.phase));
    const qnc::GridSpec grid{args.half_width, args.points};
    const qnc::QpdGrid values = qnc::qpd_grid(state, args.s, grid);
    const auto axis = qnc::grid_axis(grid);

    std::vector<std::vector<double>> rows;
    rows.reserve(values.values.size());
    for (int iy = 0; iy < grid.points_per_axis; ++iy) {
        for (int ix = 0; ix < grid.points_per_axis; ++ix) {
            rows.push_back({axis[ix], axis[iy], values.value(iy, ix)});
        }
    }
    qnc::atomic_write(args.out, qnc::csv_table({"re_alpha", "im_alpha", "value"}, rows, args.precision));
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify suites

class SuiteRunner {
  public:
    void report(const std::string& name, bool pass, const std::string& detail = "") {
        std::printf("[%s] %s%s%s\n", pass ? "ok" : "FAIL", name.c_str(), detail.empty() ? "" : ": ",
                    detail.c_str());
        all_pass_ &= pass;
    }

    void report(const qnc::SuiteReport& suite) {
        std::string detail;
        if (!suite.pass && !suite.failures.empty()) detail = suite.failures.front();
        report(suite.name + " (" + std::to_string(suite.checks) + " checks)", suite.pass, detail);
    }

    bool all_pass() const { return all_pass_; }

  private:
    bool all_pass_ = true;
};

void verify_tables(SuiteRunner& runner) {
    try {
        qnc::verify_reference_measures();
        runner.report("reference-state closed forms within 1e-9", true);
    } catch (const std::exception& e) {
        runner.report("reference-state closed forms within 1e-9", false, e.what());
    }
    runner.report(qnc::verify_ordering_relations());

    const std::vector<std::pair<qnc::QubitState, int>> cases = {
        {qnc::make_state(0.0, 0.0), 1},
        {qnc::make_state(1.0, 0.0), 1},
        {qnc::make_state(0.5, 0.25), 2},
        {qnc::family_state(qnc::Pure{0.3}), 3},
        {qnc::family_state(qnc::Pure{0.7}), 3},
        {qnc::family_state(qnc::Mixed{0.3}), 4},
        {qnc::family_state(qnc::Mixed{0.7}), 4},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [state, expected] : cases) {
        try {
            const int got = qnc::verify_inequality_chain(state).chain_case;
            if (got != expected) {
                ok = false;
                detail = "state p=" + std::to_string(state.p) + " classified case " + std::to_string(got) +
                         ", expected " + std::to_string(expected);
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    runner.report("chain case classification", ok, detail);
}

void verify_inequalities(SuiteRunner& runner, std::uint64_t seed) {
    const auto states = qnc::sample_states({100000, seed, qnc::SampleLaw::uniform_pxr});
    long long violations = 0;
    constexpr double slack = 1e-9;
    for (const auto& st : states) {
        const double tau = qnc::depth_analytic(st).tau;
        const double d = qnc::nonclassical_distance(st);
        const double cp = qnc::concurrence_potential(st);
        const double np = qnc::negativity_potential_closed(st);
        const bool ok = tau >= d - slack && std::abs(d - cp) <= slack && cp >= np - slack &&
                        tau <= 1.0 + slack && np >= -slack;
        if (!ok) ++violations;
    }
    runner.report("inequality chain on 1e5-state cloud", violations == 0,
                  violations ? std::to_string(violations) + " violations" : "");

    for (const double p : {0.25, 0.5, 0.75}) {
        std::vector<double> xs;
        for (int i = 0; i <= 10; ++i) xs.push_back(std::sqrt(p * (1.0 - p)) * i / 10.0);
        runner.report(qnc::verify_dephasing_chain(p, xs));
    }
    runner.report(qnc::verify_mixed_maximality());
}

void verify_oracles(SuiteRunner& runner, std::uint64_t seed, double depth_tol) {
    // Depth: bisection oracle against the closed form.
    {
        const auto states = qnc::sample_states({100, seed + 1, qnc::SampleLaw::uniform_pxr});
        double worst = 0.0;
        for (const auto& st : states) {
            const double analytic = qnc::depth_analytic(st).tau;
            const double numeric = qnc::depth_numeric(st, {}, depth_tol).tau;
            worst = std::max(worst, std::abs(analytic - numeric));
        }
        runner.report("depth analytic vs bisection on 100 states", worst <= 1e-4,
                      "max |diff| = " + qnc::format_double(worst, 3));
    }

    // Negativity: spectral vs moments vs closed form.
    {
        const auto states = qnc::sample_states({10000, seed + 2, qnc::SampleLaw::uniform_pxr});
        double worst = 0.0;
        for (const auto& st : states) {
            const auto out = qnc::bs_output(st);
            const double spectral = qnc::negativity_spectral(out).value;
            const double moments = qnc::negativity_moments(out).value;
            const double closed = qnc::negativity_potential_closed(st);
            worst = std::max({worst, std::abs(spectral - moments), std::abs(spectral - closed)});
        }
        runner.report("NP three-route agreement on 1e4 states", worst <= 1e-8,
                      "max |diff| = " + qnc::format_double(worst, 3));
    }

    // Phase invariance of all measures.
    {
        const auto states = qnc::sample_states({100, seed + 3, qnc::SampleLaw::uniform_pxr});
        double worst = 0.0;
        for (const auto& st : states) {
            for (const double phase : {0.7, 2.1, 4.4}) {
                const qnc::QubitState rotated = qnc::make_state(st.p, st.x * std::polar(1.0, phase));
                worst = std::max(worst, std::abs(qnc::depth_analytic(st).tau - qnc::depth_analytic(rotated).tau));
                worst = std::max(worst, std::abs(qnc::negativity_potential_closed(st) -
                                                 qnc::negativity_potential_closed(rotated)));
                worst = std::max(worst, std::abs(qnc::nonclassical_distance(st) -
                                                 qnc::nonclassical_distance(rotated)));
            }
        }
        runner.report("phase invariance of tau, NP, D", worst <= 1e-12,
                      "max |diff| = " + qnc::format_double(worst, 3));
    }

    // General Fock-sum QPD against the qubit closed form.
    {
        const auto states = qnc::sample_states({10, seed + 4, qnc::SampleLaw::uniform_pxr});
        double worst = 0.0;
        for (const auto& st : states) {
            for (const double s : {-1.0, -0.5, 0.0, 0.5, 0.9}) {
                for (int iy = 0; iy < 21; ++iy) {
                    for (int ix = 0; ix < 21; ++ix) {
                        const qnc::complexd alpha{-3.0 + 0.3 * ix, -3.0 + 0.3 * iy};
                        const double direct = qnc::qpd_qubit(st, s, alpha);
                        const double general = qnc::qpd_general(st.matrix(), s, alpha);
                        worst = std::max(worst, std::abs(direct - general));
                    }
                }
            }
        }
        runner.report("qpd_general matches qpd_qubit", worst <= 1e-12,
                      "max |diff| = " + qnc::format_double(worst, 3));
    }
}

int run_verify(const VerifyArgs& args) {
    SuiteRunner runner;
    try {
        if (args.suite == "tables" || args.suite == "all") verify_tables(runner);
        if (args.suite == "inequalities" || args.suite == "all") verify_inequalities(runner, args.seed);
        if (args.suite == "oracles" || args.suite == "all") verify_oracles(runner, args.seed, args.depth_tol);
    } catch (const std::exception& e) {
        runner.report("suite aborted", false, e.what());
    }
    return runner.all_pass() ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonclassicality measures for single-qubit states in the {vacuum, single-photon} basis"};
    app.require_subcommand(1);

    MeasureArgs measure_args;
    auto* measure = app.add_subcommand("measure", "compute all four measures of one state");
    auto* opt_p = measure->add_option("--p", measure_args.p, "population <1|rho|1>");
    measure->add_option("--x", measure_args.x, "coherence magnitude |<0|rho|1>|");
    measure->add_option("--phase", measure_args.phase, "coherence phase in radians");
    measure->add_option("--family", measure_args.family, "general, pure, mixed, opt or plus")
        ->check(CLI::IsMember({"general", "pure", "mixed", "opt", "plus"}));
    measure->add_option("--tau", measure_args.tau, "target depth for --family opt");
    measure->add_option("--tau0", measure_args.tau0, "limit depth for --family plus");
    measure->add_option("--eps", measure_args.eps, "population for --family plus");
    measure->add_flag("--json", measure_args.as_json, "emit JSON instead of text");
    measure->callback([&] {
        const bool needs_p = measure_args.family == "general" || measure_args.family == "pure" ||
                             measure_args.family == "mixed";
        if (needs_p && opt_p->count() == 0) {
            throw CLI::RequiredError("--p (for family '" + measure_args.family + "')");
        }
    });

    FiguresArgs figures_args;
    auto* figures = app.add_subcommand("figures", "emit cloud and boundary-curve data for one panel");
    figures->add_option("--panel", figures_args.panel, "d-tau, np-tau or d-np")->required();
    figures->add_option("--out", figures_args.out_dir, "output directory")->envname("QNC_OUT_DIR");
    figures->add_option("--n-mc", figures_args.n_mc, "Monte Carlo cloud size");
    figures->add_option("--seed", figures_args.seed, "RNG seed");
    figures->add_option("--samples", figures_args.samples, "boundary curve samples");
    figures->add_option("--precision", figures_args.precision, "CSV significant digits (1-17)");
    figures->add_option("--tau0-tol", figures_args.tau0_tol, "bracket width for the tau0 search");
    figures->add_option("--law", figures_args.law, "uniform-pxr or uniform-purity");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", verify_args.suite, "tables, inequalities, oracles or all")
        ->required()
        ->check(CLI::IsMember({"tables", "inequalities", "oracles", "all"}));
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--depth-tol", verify_args.depth_tol, "zero threshold for the depth bisection oracle");

    QpdArgs qpd_args;
    auto* qpd = app.add_subcommand("qpd", "dump an s-parametrized quasiprobability grid as CSV");
    qpd->add_option("--p", qpd_args.p, "population <1|rho|1>")->required();
    qpd->add_option("--x", qpd_args.x, "coherence magnitude");
    qpd->add_option("--phase", qpd_args.phase, "coherence phase in radians");
    qpd->add_option("--s", qpd_args.s, "Cahill-Glauber order in [-1, 1)")->required();
    qpd->add_option("--half-width", qpd_args.half_width, "grid half width");
    qpd->add_option("--points", qpd_args.points, "points per axis (>= 16)");
    qpd->add_option("--precision", qpd_args.precision, "CSV significant digits (1-17)");
    qpd->add_option("--out", qpd_args.out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
        if (measure->parsed()) return run_measure(measure_args);
        if (figures->parsed()) return run_figures(figures_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (qpd->parsed()) return run_qpd(qpd_args);
        return exit_invalid_input;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_input;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid_input;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return exit_io_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io_error;
    }
}
