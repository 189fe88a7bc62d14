#include <doctest.h>

#include <cmath>

#include "dgp.hpp"
#include "errors.hpp"
#include "rng.hpp"

using namespace zeroacf;

TEST_CASE("splitmix64 reference stream") {
    // Known test vector for seed 1234567.
    Rng rng(1234567);
    CHECK(rng.next_u64() == 6457827717110365317ULL);
    CHECK(rng.next_u64() == 3203168211198807973ULL);
    Rng other(1234567);
    CHECK(other.next_u64() == 6457827717110365317ULL);
    // uniforms stay inside [0, 1)
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gaussian moments") {
    Rng rng(99);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.next_gaussian();
        sum += z;
        sum2 += z * z;
        sum4 += z * z * z * z;
    }
    CHECK(std::fabs(sum / n) < 0.01);
    CHECK(std::fabs(sum2 / n - 1.0) < 0.02);
    CHECK(std::fabs(sum4 / n - 3.0) < 0.1);
}

TEST_CASE("variance profile") {
    CHECK(variance_profile(0.2, 0.5, 2.0) == 0.5);
    CHECK(variance_profile(0.5, 0.5, 2.0) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(variance_profile(0.6, 0.5, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(variance_profile(0.61, 0.5, 2.0) == 2.0);
    // continuity at both knots
    for (double knot : {0.4, 0.6}) {
        const double before = variance_profile(knot, 0.5, 2.0);
        const double after = variance_profile(knot + 1e-9, 0.5, 2.0);
        CHECK(std::fabs(before - after) < 1e-6);
    }
    CHECK_THROWS_AS(variance_profile(0.0, 0.5, 2.0), Error);
    CHECK_THROWS_AS(variance_profile(1.1, 0.5, 2.0), Error);
}

TEST_CASE("probability profile") {
    CHECK(probability_profile(0.2, 0.3, 0.9) == 0.3);
    CHECK(probability_profile(0.5, 0.3, 0.9) == doctest::Approx(0.6).epsilon(1e-12));
    for (double s : {0.1, 0.45, 0.75, 1.0}) {
        CHECK(probability_profile(s, 0.6, 0.6) == doctest::Approx(0.6).epsilon(1e-12));
    }
    for (double knot : {0.4, 0.6}) {
        const double before = probability_profile(knot, 0.3, 0.9);
        const double after = probability_profile(knot + 1e-9, 0.3, 0.9);
        CHECK(std::fabs(before - after) < 1e-6);
    }
}

TEST_CASE("case presets") {
    CHECK(DgpConfig::case_deltas(DgpCase::i) == std::array<double, 4>{0.5, 2.0, 0.3, 0.9});
    CHECK(DgpConfig::case_deltas(DgpCase::ii) == std::array<double, 4>{1.0, 1.0, 0.3, 0.9});
    CHECK(DgpConfig::case_deltas(DgpCase::iii) == std::array<double, 4>{0.5, 2.0, 0.6, 0.6});
    CHECK(DgpConfig::case_deltas(DgpCase::iv) == std::array<double, 4>{1.0, 1.0, 0.6, 0.6});
}

TEST_CASE("innovation calibration") {
    const std::size_t n = 50000;
    SUBCASE("correlated variant: P(y != 0) ~ 0.72") {
        Rng rng(2024);
        const auto y = innovation_stream(Innovation::correlated_ar, n, rng);
        std::size_t nonzero = 0;
        for (double v : y) nonzero += v != 0.0 ? 1 : 0;
        const double p = static_cast<double>(nonzero) / static_cast<double>(n);
        CHECK(p == doctest::Approx(0.72).epsilon(0.015));
    }
    SUBCASE("uncorrelated variant: P(y != 0) ~ 0.83") {
        Rng rng(2025);
        const auto y = innovation_stream(Innovation::uncorrelated, n, rng);
        std::size_t nonzero = 0;
        for (double v : y) nonzero += v != 0.0 ? 1 : 0;
        const double p = static_cast<double>(nonzero) / static_cast<double>(n);
        CHECK(p == doctest::Approx(0.83).epsilon(0.015));
    }
    SUBCASE("one-sided threshold as printed gives a very different rate") {
        Rng rng(2026);
        const auto y = innovation_stream(Innovation::uncorrelated, n, rng, true);
        std::size_t nonzero = 0;
        for (double v : y) nonzero += v != 0.0 ? 1 : 0;
        const double p = static_cast<double>(nonzero) / static_cast<double>(n);
        CHECK(p < 0.5);
        for (double v : y) CHECK(v >= 0.0); // kept values are the positive ones
    }
    SUBCASE("uncorrelated variant is serially uncorrelated") {
        Rng rng(2027);
        const auto y = innovation_stream(Innovation::uncorrelated, 1000000, rng);
        double mean = 0.0;
        for (double v : y) mean += v;
        mean /= static_cast<double>(y.size());
        double num = 0.0, den = 0.0;
        for (std::size_t t = 1; t < y.size(); ++t) num += (y[t] - mean) * (y[t - 1] - mean);
        for (double v : y) den += (v - mean) * (v - mean);
        CHECK(std::fabs(num / den) < 0.01);
    }
}

TEST_CASE("simulate") {
    SUBCASE("deterministic for a given seed") {
        const DgpConfig config = DgpConfig::for_case(DgpCase::ii, 400, 77);
        const ReturnSeries a = simulate(config);
        const ReturnSeries b = simulate(config);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.values()[i] == b.values()[i]);
        }
        DgpConfig other = config;
        other.seed = 78;
        const ReturnSeries c = simulate(other);
        bool any_diff = false;
        for (std::size_t i = 0; i < a.size(); ++i) any_diff |= a.values()[i] != c.values()[i];
        CHECK(any_diff);
    }
    SUBCASE("degenerate Bernoulli: delta3 = delta4 = 1 keeps every innovation") {
        DgpConfig config = DgpConfig::for_case(DgpCase::iv, 300, 5, Innovation::correlated_ar);
        config.deltas = {1.0, 1.0, 1.0, 1.0};
        const ReturnSeries series = simulate(config);
        Rng rng(5);
        const auto y = innovation_stream(Innovation::correlated_ar, 300, rng);
        for (std::size_t t = 0; t < 300; ++t) {
            CHECK(series.values()[t] == y[t]); // sigma = 1, a1 = 1
        }
    }
    SUBCASE("zero fraction of case iv matches the independence product") {
        DgpConfig config = DgpConfig::for_case(DgpCase::iv, 20000, 11, Innovation::correlated_ar);
        const ReturnSeries series = simulate(config);
        // P(a=1) = 0.6 * P(y != 0) ~ 0.6 * 0.715
        CHECK(series.zero_fraction() == doctest::Approx(1.0 - 0.6 * 0.715).epsilon(0.05));
    }
    SUBCASE("invalid deltas are rejected") {
        DgpConfig config = DgpConfig::for_case(DgpCase::iv, 100, 1);
        config.deltas[2] = 0.0;
        CHECK_THROWS_AS(simulate(config), Error);
        config = DgpConfig::for_case(DgpCase::iv, 100, 1);
        config.deltas[0] = -1.0;
        CHECK_THROWS_AS(simulate(config), Error);
    }
}
