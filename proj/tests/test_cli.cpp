#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "scsa/cli_app.hpp"
#include "scsa/signal.hpp"

using namespace scsa;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "scsa_cli_test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("generate and analyze round trip") {
    TempDir dir;
    auto sig = dir.file("sig.csv");
    auto report = dir.file("report.json");

    REQUIRE(run_cli({"generate", "--kind", "sech2", "--x0", "6", "--a", "0", "--b", "15",
                     "--m", "512", "--out", sig}) == 0);
    Signal s = load_csv(sig);
    int arg = static_cast<int>(std::max_element(s.samples.begin(), s.samples.end()) -
                               s.samples.begin());
    // the grid need not sample x = 6 exactly; peak within one spacing
    CHECK(s.max() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::abs(s.grid.x(arg) - 6.0) <= s.grid.dx);

    REQUIRE(run_cli({"analyze", "--in", sig, "--chi", "6", "--out", report}) == 0);
    auto j = nlohmann::json::parse(slurp(report));
    CHECK(j["chi"] == 6.0);
    CHECK(j["count"] == 2);
    REQUIRE(j["kappas"].size() == 2);
    CHECK(std::abs(j["kappas"][0].get<double>() - 2.0) <= 1e-3);
    CHECK(std::abs(j["kappas"][1].get<double>() - 1.0) <= 1e-3);
    CHECK(j["shift_offset"] == 0.0);
    CHECK(j["mse"].get<double>() <= 1e-5);
    CHECK(std::abs(j["deficit"].get<double>()) <= 2e-3);

    // idempotence: identical inputs rewrite byte-identical outputs
    std::string first = slurp(report);
    REQUIRE(run_cli({"analyze", "--in", sig, "--chi", "6", "--out", report}) == 0);
    CHECK(slurp(report) == first);
}

TEST_CASE("analyze shifts signed signals and records the offset") {
    TempDir dir;
    auto sig = dir.file("sine.csv");
    auto report = dir.file("report.json");
    REQUIRE(run_cli({"generate", "--kind", "sine", "--a", "0", "--b", "2", "--m", "256",
                     "--out", sig}) == 0);
    REQUIRE(run_cli({"analyze", "--in", sig, "--chi", "10", "--out", report}) == 0);
    auto j = nlohmann::json::parse(slurp(report));
    CHECK(j["shift_offset"].get<double>() == doctest::Approx(-2.0).epsilon(1e-4));
}

TEST_CASE("error exit codes") {
    TempDir dir;
    CHECK(run_cli({"analyze", "--in", dir.file("missing.csv"), "--chi", "6", "--out",
                   dir.file("r.json")}) == 2);
    CHECK(run_cli({"frobnicate"}) == 1);
    CHECK(run_cli({"analyze", "--chi", "6"}) == 1);  // missing required options
}

TEST_CASE("sweep writes a per-chi table") {
    TempDir dir;
    auto sig = dir.file("sig.csv");
    auto table = dir.file("sweep.csv");
    REQUIRE(run_cli({"generate", "--kind", "sech2", "--m", "256", "--out", sig}) == 0);
    REQUIRE(run_cli({"sweep", "--in", sig, "--chi-min", "1", "--chi-max", "30", "--points",
                     "6", "--out", table}) == 0);
    std::istringstream in(slurp(table));
    std::string line;
    std::getline(in, line);
    CHECK(line == "chi,count,mse");
    int rows = 0, prev_count = 0;
    while (std::getline(in, line)) {
        double chi, mse;
        int count;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%d,%lf", &chi, &count, &mse) == 3);
        CHECK(count >= prev_count);
        prev_count = count;
        ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("fit reports the optimized chi") {
    TempDir dir;
    auto sig = dir.file("sig.csv");
    auto report = dir.file("fit.json");
    REQUIRE(run_cli({"generate", "--kind", "sech2", "--m", "256", "--out", sig}) == 0);
    REQUIRE(run_cli({"fit", "--in", sig, "--n", "2", "--bracket-lo", "2", "--bracket-hi", "8",
                     "--out", report}) == 0);
    auto j = nlohmann::json::parse(slurp(report));
    CHECK(j["count"] == 2);
    CHECK(j["chi"].get<double>() == doctest::Approx(6.0).epsilon(0.02));
    CHECK(j["mse"].get<double>() <= 1e-5);
}

TEST_CASE("decompose writes additive fast/slow parts") {
    TempDir dir;
    auto sig = dir.file("sig.csv");
    REQUIRE(run_cli({"generate", "--kind", "sech2", "--m", "256", "--out", sig}) == 0);
    REQUIRE(run_cli({"decompose", "--in", sig, "--chi", "20", "--n-fast", "2", "--out-fast",
                     dir.file("fast.csv"), "--out-slow", dir.file("slow.csv")}) == 0);
    Signal fast = load_csv(dir.file("fast.csv"));
    Signal slow = load_csv(dir.file("slow.csv"));
    REQUIRE(fast.size() == slow.size());
    for (int j = 0; j < fast.size(); ++j) {
        CHECK(fast.samples[j] >= 0.0);
        CHECK(slow.samples[j] >= 0.0);
    }
    CHECK(trapezoid(fast.samples, fast.grid.dx) > 0.0);
}

TEST_CASE("soliton subcommand evaluates the determinant formula") {
    TempDir dir;
    auto out = dir.file("soliton.csv");
    REQUIRE(run_cli({"soliton", "--chi", "2", "--kappas", "1", "--constants", "1.4142135623730951",
                     "--a", "-9", "--b", "9", "--m", "601", "--out", out}) == 0);
    Signal y = load_csv(out);
    int mid = 300;  // x = 0
    CHECK(y.samples[mid] == doctest::Approx(1.0).epsilon(1e-5));
}
