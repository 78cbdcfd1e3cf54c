#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "scsa/signal.hpp"

using namespace scsa;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("make_grid basics") {
    Grid g = make_grid(0, 15, 16);
    CHECK(g.dx == doctest::Approx(1.0).epsilon(1e-14));

    Grid fine = make_grid(0, 15, 512);
    CHECK(fine.x(0) == 0.0);
    CHECK(fine.x(511) == doctest::Approx(15.0).epsilon(1e-14));

    CHECK_THROWS_AS(make_grid(1, 0, 8), InvalidDomainError);
    CHECK_THROWS_AS(make_grid(0, 1, 3), InvalidDomainError);
}

TEST_CASE("sech2 generator peaks at x0 and is symmetric") {
    Grid g = make_grid(0, 12, 481);  // symmetric about x0 = 6
    Signal s = generate_sech2(g, 6.0);
    CHECK(s.max() == doctest::Approx(1.0).epsilon(1e-12));
    for (int t = 1; t < 240; ++t)
        CHECK(s.samples[240 + t] == doctest::Approx(s.samples[240 - t]).epsilon(1e-12));
}

TEST_CASE("gaussian generator peak value") {
    Grid g = make_grid(0, 1.5, 513);
    Signal s = generate_gaussian(g, 0.75, 0.1);
    CHECK(s.max() == doctest::Approx(1.0 / (0.1 * std::sqrt(2 * std::numbers::pi))).epsilon(1e-10));
    CHECK_THROWS_AS(generate_gaussian(g, 0.75, 0.0), InvalidParameterError);
}

TEST_CASE("sine generator and shift") {
    Grid g = make_grid(0, 2, 512);
    Signal s = generate_sine(g, 2.0, std::numbers::pi, -0.5);
    CHECK(s.min() == doctest::Approx(-2.0).epsilon(1e-6));

    ShiftedSignal shifted = shift_nonnegative(s);
    CHECK(shifted.offset == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(shifted.signal.min() >= 0.0);
    // adding the offset back reproduces the input (up to one rounding)
    for (int j = 0; j < s.size(); ++j)
        CHECK(shifted.signal.samples[j] + shifted.offset ==
              doctest::Approx(s.samples[j]).epsilon(1e-15));
}

TEST_CASE("shift_nonnegative leaves nonnegative signals alone") {
    Grid g = make_grid(0, 15, 64);
    Signal s = generate_sech2(g, 6.0);
    ShiftedSignal shifted = shift_nonnegative(s);
    CHECK(shifted.offset == 0.0);
    CHECK(shifted.signal.samples == s.samples);

    Signal flat{g, std::vector<double>(64, -1.0)};
    ShiftedSignal zeroed = shift_nonnegative(flat);
    CHECK(zeroed.offset == -1.0);
    CHECK(zeroed.signal.max() == 0.0);
}

TEST_CASE("chirp rejects nonpositive frequencies") {
    Grid g = make_grid(0, 2, 64);
    CHECK_THROWS_AS(generate_chirp(g, 1.0, 0.0, 3.0), InvalidParameterError);
    CHECK_NOTHROW(generate_chirp(g, 1.0, 0.5, 3.0));
}

TEST_CASE("csv round trip is lossless") {
    Grid g = make_grid(0, 15, 128);
    Signal s = generate_sech2(g, 6.0);
    auto path = temp_file("scsa_roundtrip.csv");
    save_csv(s, path.string());
    Signal back = load_csv(path.string());
    REQUIRE(back.size() == s.size());
    for (int j = 0; j < s.size(); ++j) {
        CHECK(back.samples[j] == s.samples[j]);
        CHECK(back.grid.x(j) == doctest::Approx(s.grid.x(j)).epsilon(1e-12));
    }
    std::filesystem::remove(path);
}

TEST_CASE("csv rejects jittered abscissae") {
    auto path = temp_file("scsa_jitter.csv");
    {
        std::ofstream out(path);
        out << "x,value\n";
        for (int j = 0; j < 32; ++j) {
            double x = j * 0.1 + (j == 17 ? 1e-3 : 0.0);
            out << x << "," << j << "\n";
        }
    }
    CHECK_THROWS_AS(load_csv(path.string()), NonEquidistantGridError);
    std::filesystem::remove(path);
}

TEST_CASE("csv parse errors") {
    auto path = temp_file("scsa_bad.csv");
    {
        std::ofstream out(path);
        out << "x,value\n0,1\n0.1,abc\n0.2,3\n0.3,4\n";
    }
    CHECK_THROWS_AS(load_csv(path.string()), ParseError);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_csv("/nonexistent/scsa.csv"), ParseError);
}
