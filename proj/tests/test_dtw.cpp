#include <doctest.h>

#include <cmath>
#include <random>

#include "grantha/dtw.hpp"
#include "grantha/error.hpp"
#include "oracles.hpp"

using namespace grantha;

namespace {

Series series1(std::vector<double> v) { return Series{std::move(v), 1}; }

}  // namespace

TEST_CASE("single-point sequences") {
    CHECK(dtw_distance(series1({0}).view(), series1({3}).view()) == 3.0);
}

TEST_CASE("identity is exactly zero") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto a = oracle::random_series(rng, 1 + i % 20, 1 + i % 3);
        CHECK(dtw_distance(a.view(), a.view()) == 0.0);
        const auto path = warping_path(a.view(), a.view());
        CHECK(path.size() == a.size());
        for (std::size_t k = 0; k < path.size(); ++k) CHECK(path.pairs[k] == std::pair{k, k});
    }
}

TEST_CASE("worked example against enumeration") {
    const auto q = series1({1, 2, 3});
    const auto c = series1({1, 2, 2, 3});
    const DtwConfig wide{1.0, true};
    const double d = dtw_distance(q.view(), c.view(), wide);
    CHECK(d == doctest::Approx(oracle::brute_force_dtw(q, c, 3)).epsilon(1e-12));
    // Every path touches a non-zero cell, except the ones that pair 2 with
    // both middle 2s; those have cost 0.
    CHECK(d == 0.0);
    const auto a = dtw_align(q.view(), c.view(), wide);
    CHECK(path_cost(q.view(), c.view(), a.path) == doctest::Approx(a.distance));
    CHECK(is_admissible(a.path, 3, 4, 3));
}

TEST_CASE("longer paths can win under length normalization") {
    // Q=[0,0], C=[0,1]: the diagonal costs sqrt(1)/2, the three-step path
    // (0,0)->(1,0)->(1,1) also costs sqrt(1)/3.
    const auto q = series1({0, 0});
    const auto c = series1({0, 1});
    const double d = dtw_distance(q.view(), c.view(), DtwConfig{1.0, true});
    CHECK(d == doctest::Approx(1.0 / 3.0));
    CHECK(d == doctest::Approx(oracle::brute_force_dtw(q, c, 1)));
    CHECK(warping_path(q.view(), c.view(), DtwConfig{1.0, true}).size() == 3);
}

TEST_CASE("DP equals brute-force enumeration") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::size_t> len(1, 8), ch(1, 3);
    std::uniform_real_distribution<double> frac(0.05, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t channels = ch(rng);
        const auto a = oracle::random_series(rng, len(rng), channels);
        const auto b = oracle::random_series(rng, len(rng), channels);
        const DtwConfig cfg{frac(rng), true};
        const std::size_t band = band_width(a.size(), b.size(), cfg);
        const double expect = oracle::brute_force_dtw(a, b, band);
        const auto got = dtw_align(a.view(), b.view(), cfg);
        REQUIRE(std::abs(got.distance - expect) <= 1e-9);
        REQUIRE(dtw_distance(a.view(), b.view(), cfg) == got.distance);
        REQUIRE(is_admissible(got.path, a.size(), b.size(), band));
        REQUIRE(std::abs(path_cost(a.view(), b.view(), got.path) - got.distance) <= 1e-12);
    }
}

TEST_CASE("symmetry, nonnegativity and window monotonicity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> len(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = oracle::random_series(rng, len(rng), 2);
        const auto b = oracle::random_series(rng, len(rng), 2);
        const double ab = dtw_distance(a.view(), b.view());
        CHECK(ab >= 0.0);
        CHECK(std::abs(ab - dtw_distance(b.view(), a.view())) <= 1e-9);
        double previous = INFINITY;
        for (double w : {0.05, 0.1, 0.2, 0.4, 0.7, 1.0}) {
            const double d = dtw_distance(a.view(), b.view(), DtwConfig{w, true});
            CHECK(d <= previous);
            previous = d;
        }
    }
}

TEST_CASE("band width and configuration errors") {
    CHECK(band_width(10, 10, DtwConfig{0.1, true}) == 1);
    CHECK(band_width(10, 10, DtwConfig{0.25, true}) == 3);
    CHECK(band_width(10, 16, DtwConfig{0.1, true}) == 6);
    CHECK_THROWS_AS(band_width(10, 16, DtwConfig{0.1, false}), ConfigError);
    CHECK_THROWS_AS(band_width(10, 10, DtwConfig{0.0, true}), ConfigError);
    CHECK_THROWS_AS(band_width(10, 10, DtwConfig{1.5, true}), ConfigError);
    const auto a = series1({1, 2});
    CHECK_THROWS_AS(dtw_distance(a.view(), Series{{}, 1}.view()), ArgumentError);
    CHECK_THROWS_AS(dtw_distance(a.view(), Series{{1, 2}, 2}.view()), ArgumentError);
}

TEST_CASE("path admissibility checks") {
    WarpingPath good{{{0, 0}, {1, 1}, {1, 2}}};
    CHECK(is_admissible(good, 2, 3, 1));
    CHECK_FALSE(is_admissible(good, 2, 3, 0));
    CHECK_FALSE(is_admissible(WarpingPath{{{0, 0}, {1, 2}}}, 2, 3, 2));   // skips a column
    CHECK_FALSE(is_admissible(WarpingPath{{{0, 1}, {1, 2}}}, 2, 3, 2));   // misses (0,0)
    CHECK_FALSE(is_admissible(WarpingPath{{{0, 0}, {1, 1}}}, 2, 3, 2));   // misses the end
    CHECK_FALSE(is_admissible(WarpingPath{{{0, 0}, {0, 0}, {1, 2}}}, 2, 3, 2));
}

TEST_CASE("backtracking prefers the diagonal") {
    // All costs zero: every path ties at 0, the shortest K is kept and
    // backtracking from the end takes diagonals first.
    const auto z3 = series1({0, 0, 0});
    const auto z4 = series1({0, 0, 0, 0});
    const auto p = warping_path(z3.view(), z4.view(), DtwConfig{1.0, true});
    CHECK(p.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}, {1, 2}, {2, 3}});
}
