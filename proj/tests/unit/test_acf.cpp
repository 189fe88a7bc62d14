#include <doctest.h>

#include <cmath>

#include "acf.hpp"
#include "errors.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using namespace zeroacf;

namespace {

const ReturnSeries kFixture = ReturnSeries::from_returns({1, 0, -1, 2});

// r = [1, 2, 3] with rectangular kernel and b >= 1: uniform leave-one-out
// weights 1/2, so p_t = 1 and p_{t,t-1} = 1/2.
ProbabilityCurves uniform_curves_123() {
    const std::vector<std::uint8_t> a{1, 1, 1};
    KernelPlan plan;
    plan.kernel = KernelShape::rectangular;
    plan.b0 = 1.0;
    plan.bh = {1.0};
    return smooth_probabilities(a, 1, plan);
}

ProbabilityCurves fixed_curves(std::size_t n, int m, double p_t_value, double p_th_value) {
    ProbabilityCurves curves;
    curves.p_t.assign(n, p_t_value);
    curves.p_th.resize(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        curves.p_th[static_cast<std::size_t>(h) - 1].assign(n - static_cast<std::size_t>(h),
                                                            p_th_value);
    }
    return curves;
}

} // namespace

TEST_CASE("gamma0 definitional values") {
    CHECK(gamma0(kFixture, 0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(gamma0(kFixture, 1) == doctest::Approx(-0.5).epsilon(1e-15));
    // single product containing a zero
    const ReturnSeries edge = ReturnSeries::from_returns({0, 5, 7});
    CHECK(gamma0(edge, 2) == 0.0);
    CHECK_THROWS_AS(gamma0(kFixture, 4), Error);
    CHECK_THROWS_AS(gamma0(kFixture, -1), Error);
}

TEST_CASE("gamma_a definitional values") {
    CHECK(gamma_a(kFixture, 0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(gamma_a(kFixture, 1) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(gamma_a(kFixture, 2) == doctest::Approx(0.25).epsilon(1e-15));

    const ReturnSeries ones = ReturnSeries::from_returns({1, 2, 3, 4, 5});
    for (int h = 0; h < 5; ++h) {
        CHECK(gamma_a(ones, h) == doctest::Approx((5.0 - h) / 5.0).epsilon(1e-15));
    }
    const ReturnSeries zeros = ReturnSeries::from_returns({0, 0, 0});
    CHECK(gamma_a(zeros, 0) == 0.0);
    CHECK(gamma_a(zeros, 1) == 0.0);
}

TEST_CASE("rho_pr definitional values") {
    const auto pr = rho_pr(kFixture, 1);
    CHECK(pr[0] == doctest::Approx(-1.0).epsilon(1e-12));

    // No zeros: rho_pr(h) = rho0(h) * n/(n-h).
    const ReturnSeries full = ReturnSeries::from_returns({0.3, -1.2, 0.7, 2.0, -0.4, 1.1});
    const auto base = rho0(full, 2);
    const auto corrected = rho_pr(full, 2);
    const double n = 6.0;
    for (int h = 1; h <= 2; ++h) {
        CHECK(corrected[static_cast<std::size_t>(h) - 1] ==
              doctest::Approx(base[static_cast<std::size_t>(h) - 1] * n / (n - h)).epsilon(1e-12));
    }

    // Degenerate lag: no non-zero pairs at h = 1.
    const ReturnSeries alternating = ReturnSeries::from_returns({1, 0, 1, 0, 1});
    try {
        rho_pr(alternating, 1);
        FAIL("expected degenerate-lag error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate);
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }

    const ReturnSeries zeros = ReturnSeries::from_returns({0, 0, 0});
    CHECK_THROWS_AS(rho_pr(zeros, 1), Error);
}

TEST_CASE("gamma_ar2 definitional values") {
    const ReturnSeries series = ReturnSeries::from_returns({1, 2, 3});
    const auto curves = uniform_curves_123();
    CHECK(curves.p_t[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(curves.pair_prob(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(gamma_ar2(series, 1, curves) == doctest::Approx(3.25).epsilon(1e-12));

    // Every summand zero.
    const ReturnSeries zeros = ReturnSeries::from_returns({0, 0, 0});
    const auto zero_curves = fixed_curves(3, 1, 0.0, 0.0);
    CHECK(gamma_ar2(zeros, 1, zero_curves) == 0.0);

    // Constant ratio factors out.
    const ReturnSeries any = ReturnSeries::from_returns({1.5, -2.0, 0.5, 3.0});
    const double c = 0.4;
    const auto const_curves = fixed_curves(4, 1, 0.8, 0.8 * c);
    double mean_sq = 0.0;
    for (std::size_t t = 1; t < 4; ++t) mean_sq += any.values()[t] * any.values()[t];
    mean_sq /= 3.0;
    CHECK(gamma_ar2(any, 1, const_curves) == doctest::Approx(c * mean_sq).epsilon(1e-12));
}

TEST_CASE("rho_vpr definitional value") {
    const ReturnSeries series = ReturnSeries::from_returns({1, 2, 3});
    const auto curves = uniform_curves_123();
    const auto vpr = rho_vpr(series, 1, curves);
    // gamma0(0) = 14/3, rho0(1) = 4/7, gamma_ar2(1) = 13/4 -> 32/39
    CHECK(vpr[0] == doctest::Approx(32.0 / 39.0).epsilon(1e-12));
    CHECK(vpr[0] == doctest::Approx(0.820513).epsilon(1e-6));
}

TEST_CASE("estimate_acf bundles the per-lag vectors consistently") {
    Rng rng(17);
    const auto values = testutil::random_returns(rng, 80, 0.35);
    const ReturnSeries series = ReturnSeries::from_returns(values);
    KernelPlan plan;
    plan.kernel = KernelShape::epanechnikov;
    plan.b0 = 0.3;
    plan.bh = {0.3, 0.3};
    const auto curves = smooth_probabilities(series.indicator(), 2, plan);
    const auto est = estimate_acf(series, 2, curves);
    REQUIRE(est.m == 2);
    for (int h = 1; h <= 2; ++h) {
        const std::size_t i = static_cast<std::size_t>(h) - 1;
        CHECK(est.gamma0[static_cast<std::size_t>(h)] ==
              doctest::Approx(gamma0(series, h)).epsilon(1e-15));
        CHECK(est.rho_pr[i] == doctest::Approx(rho_pr(series, 2)[i]).epsilon(1e-15));
        CHECK(est.rho_vpr[i] == doctest::Approx(rho_vpr(series, 2, curves)[i]).epsilon(1e-15));
        CHECK(est.gamma_a[static_cast<std::size_t>(h)] >= 0.0);
        CHECK(est.gamma_a[static_cast<std::size_t>(h)] <=
              (80.0 - h) / 80.0 + 1e-15);
    }
}

TEST_CASE("property: pr identity against the two-ratio route") {
    Rng rng(19);
    int done = 0;
    while (done < 1000) {
        const std::size_t n = 8 + rng.next_u64() % 60;
        const auto values = testutil::random_returns(rng, n, 0.3 * rng.next_double());
        ReturnSeries series = ReturnSeries::from_returns(values);
        try {
            const auto pr = rho_pr(series, 1);
            // Independent route: (gamma0(h)/gamma_a(h)) / (gamma0(0)/gamma_a(0)).
            const double other = (gamma0(series, 1) / gamma_a(series, 1)) /
                                 (gamma0(series, 0) / gamma_a(series, 0));
            CHECK(pr[0] == doctest::Approx(other).epsilon(1e-12));
            ++done;
        } catch (const Error&) {
            // degenerate draws (all zeros / no pairs) are fine to skip
        }
    }
}

TEST_CASE("property: scale invariance of the corrected autocorrelations") {
    Rng rng(29);
    int done = 0;
    while (done < 1000) {
        const std::size_t n = 10 + rng.next_u64() % 50;
        const auto values = testutil::random_returns(rng, n, 0.4 * rng.next_double());
        const double c = (rng.next_double() < 0.5 ? -1.0 : 1.0) *
                         std::exp(4.0 * (rng.next_double() - 0.5));
        std::vector<double> scaled(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) scaled[i] = c * values[i];
        const ReturnSeries series = ReturnSeries::from_returns(values);
        const ReturnSeries series_scaled = ReturnSeries::from_returns(scaled);
        KernelPlan plan;
        plan.kernel = KernelShape::epanechnikov;
        plan.b0 = 0.4;
        plan.bh = {0.4};
        try {
            const auto curves = smooth_probabilities(series.indicator(), 1, plan);
            const auto curves_scaled = smooth_probabilities(series_scaled.indicator(), 1, plan);
            const auto est = estimate_acf(series, 1, curves);
            const auto est_scaled = estimate_acf(series_scaled, 1, curves_scaled);
            CHECK(std::fabs(est.rho0[0] - est_scaled.rho0[0]) <= 1e-12);
            CHECK(std::fabs(est.rho_pr[0] - est_scaled.rho_pr[0]) <= 1e-12);
            CHECK(std::fabs(est.rho_vpr[0] - est_scaled.rho_vpr[0]) <= 1e-12);
            ++done;
        } catch (const Error&) {
        }
    }
}

TEST_CASE("property: corrections depend on the zero pattern only through a_t") {
    Rng rng(41);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 10 + rng.next_u64() % 50;
        auto values = testutil::random_returns(rng, n, 0.3);
        const ReturnSeries before = ReturnSeries::from_returns(values);
        // perturb one non-zero entry to another non-zero value
        std::size_t idx = rng.next_u64() % n;
        for (std::size_t k = 0; k < n && values[idx] == 0.0; ++k) idx = (idx + 1) % n;
        if (values[idx] == 0.0) continue;
        values[idx] = values[idx] * 1.5 + 0.25;
        const ReturnSeries after = ReturnSeries::from_returns(values);
        for (int h = 0; h < 3 && static_cast<std::size_t>(h) < n; ++h) {
            CHECK(gamma_a(before, h) == gamma_a(after, h)); // exact
        }
    }
}
