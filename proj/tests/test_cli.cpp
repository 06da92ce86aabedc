#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args, const fs::path& stdout_path = {}) {
    std::string cmd = std::string(QNC_CLI_PATH) + " " + args;
    if (!stdout_path.empty()) {
        cmd += " > " + stdout_path.string() + " 2>&1";
    } else {
        cmd += " > /dev/null 2>&1";
    }
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_test_scratch") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("measure prints the benchmark state and exits 0") {
    const auto dir = fresh_dir("measure");
    const auto out = dir / "out.txt";
    CHECK(run("measure --p 0.5 --x 0.25", out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("0.571428571428571") != std::string::npos);
    CHECK(text.find("negativity_potential") != std::string::npos);
    CHECK(text.find("0.26604444311897") != std::string::npos);

    const auto out_json = dir / "out.json";
    CHECK(run("measure --p 0.5 --x 0.25 --json", out_json) == 0);
    const auto j = nlohmann::json::parse(slurp(out_json));
    CHECK(j["distance"].get<double>() == 0.5);
    CHECK(std::abs(j["tau"].get<double>() - 4.0 / 7.0) < 1e-12);
}

TEST_CASE("measure of the vacuum is all zeros") {
    const auto dir = fresh_dir("vacuum");
    const auto out = dir / "out.json";
    CHECK(run("measure --p 0 --x 0 --json", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["tau"].get<double>() == 0.0);
    CHECK(j["distance"].get<double>() == 0.0);
    CHECK(j["negativity_potential"].get<double>() == 0.0);
}

TEST_CASE("invalid states and flags exit 2") {
    CHECK(run("measure --p 0.5 --x 0.6") == 2);   // PSD violation
    CHECK(run("measure --p 1.5 --x 0") == 2);     // p out of range
    CHECK(run("measure") == 2);                   // missing required option
    CHECK(run("figures --panel bogus --out cli_test_scratch/bogus") == 2);
    CHECK(run("nonsense") == 2);
}

TEST_CASE("unwritable output exits 3") {
    CHECK(run("figures --panel d-tau --n-mc 100 --samples 16 --out /dev/null/nope") == 3);
    CHECK(run("qpd --p 0 --x 0 --s 0 --points 16 --out /dev/null/nope/w.csv") == 3);
}

TEST_CASE("measure family selectors") {
    const auto dir = fresh_dir("family");
    const auto out = dir / "opt.json";
    CHECK(run("measure --family opt --tau 0.2 --json", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["tau"].get<double>() == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(j["x_abs"].get<double>() > 1e-3);
    CHECK(run("measure --family plus --tau0 1.5 --eps 1e-6") == 2);
    CHECK(run("measure --family pure") == 2);  // family needs --p
}

TEST_CASE("figures emits deterministic files and a manifest with tau0") {
    const auto dir_a = fresh_dir("fig_a");
    const auto dir_b = fresh_dir("fig_b");
    const std::string common = "figures --panel np-tau --n-mc 2000 --samples 64 --seed 9";
    CHECK(run(common + " --out " + dir_a.string()) == 0);
    CHECK(run(common + " --out " + dir_b.string()) == 0);

    const auto manifest = nlohmann::json::parse(slurp(dir_a / "manifest.json"));
    const double tau0 = manifest["tau0"]["value"].get<double>();
    CHECK(tau0 >= 0.3149);
    CHECK(tau0 <= 0.3159);
    CHECK(manifest["seed"].get<std::uint64_t>() == 9);

    for (const auto& file : manifest["files"]) {
        const std::string name = file.get<std::string>();
        CAPTURE(name);
        REQUIRE(fs::exists(dir_a / name));
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
    }
    CHECK(slurp(dir_a / "manifest.json") == slurp(dir_b / "manifest.json"));

    const std::string cloud = slurp(dir_a / "cloud.csv");
    CHECK(cloud.rfind("abscissa,ordinate,p,x_abs\n", 0) == 0);

    // The mixed boundary of the d-tau panel is the two-column diagonal.
    const auto dir_c = fresh_dir("fig_c");
    CHECK(run("figures --panel d-tau --n-mc 500 --samples 32 --seed 9 --out " + dir_c.string()) == 0);
    std::istringstream mixed(slurp(dir_c / "boundary_mixed.csv"));
    std::string line;
    std::getline(mixed, line);  // header
    while (std::getline(mixed, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double a = 0.0, o = 0.0;
        row >> a >> o;
        CHECK(std::abs(a - o) <= 1e-5);  // 6 significant digits by default
    }
}

TEST_CASE("qpd dump has the documented header") {
    const auto dir = fresh_dir("qpd");
    const auto csv = dir / "wigner.csv";
    CHECK(run("qpd --p 1 --x 0 --s 0 --points 21 --out " + csv.string()) == 0);
    const std::string text = slurp(csv);
    CHECK(text.rfind("re_alpha,im_alpha,value\n", 0) == 0);
    // 21x21 points plus header.
    CHECK(std::count(text.begin(), text.end(), '\n') == 21 * 21 + 1);
    CHECK(run("qpd --p 0.5 --x 0.25 --s 1.0 --out " + csv.string()) == 2);
}

TEST_CASE("verify suite runs clean") {
    const auto dir = fresh_dir("verify");
    const auto out = dir / "verify.txt";
    CHECK(run("verify --suite tables", out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("[ok]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
    CHECK(run("verify --suite bogus") == 2);
}
