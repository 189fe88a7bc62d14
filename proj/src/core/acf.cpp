#include "acf.hpp"

#include <string>

#include "errors.hpp"

namespace zeroacf {

namespace {

void check_lag(const ReturnSeries& series, int h) {
    if (h < 0 || static_cast<std::size_t>(h) >= series.size()) {
        throw_validation("lag " + std::to_string(h) + " is invalid for a series of length " +
                         std::to_string(series.size()));
    }
}

double gamma0_0_checked(const ReturnSeries& series) {
    const double g = gamma0(series, 0);
    if (g <= 0.0) {
        throw_degenerate("gamma0(0) = 0: the series has no non-zero returns");
    }
    return g;
}

} // namespace

double gamma0(const ReturnSeries& series, int h) {
    check_lag(series, h);
    const auto r = series.values();
    const std::size_t n = r.size();
    double sum = 0.0;
    for (std::size_t t = static_cast<std::size_t>(h); t < n; ++t) {
        sum += r[t] * r[t - static_cast<std::size_t>(h)];
    }
    return sum / static_cast<double>(n);
}

double gamma_a(const ReturnSeries& series, int h) {
    check_lag(series, h);
    const auto a = series.indicator();
    const std::size_t n = a.size();
    std::size_t count = 0;
    for (std::size_t t = static_cast<std::size_t>(h); t < n; ++t) {
        count += static_cast<std::size_t>(a[t] & a[t - static_cast<std::size_t>(h)]);
    }
    return static_cast<double>(count) / static_cast<double>(n);
}

double gamma_ar2(const ReturnSeries& series, int h, const ProbabilityCurves& probs) {
    check_lag(series, h);
    if (h < 1) {
        throw_validation("gamma_ar2 is defined for lags h >= 1");
    }
    const auto r = series.values();
    const std::size_t n = r.size();
    if (probs.p_t.size() != n || probs.p_th.size() < static_cast<std::size_t>(h) ||
        probs.p_th[static_cast<std::size_t>(h) - 1].size() != n - static_cast<std::size_t>(h)) {
        throw_validation("probability curves do not cover lag " + std::to_string(h));
    }
    double sum = 0.0;
    for (std::size_t t = static_cast<std::size_t>(h); t < n; ++t) {
        const double pt = probs.p_t[t];
        if (pt == 0.0) continue; // dropped term; r_t^2 is typically zero here too
        sum += r[t] * r[t] * probs.pair_prob(h, t) / pt;
    }
    return sum / static_cast<double>(n - static_cast<std::size_t>(h));
}

std::vector<double> rho0(const ReturnSeries& series, int m) {
    check_lag(series, m);
    const double g0 = gamma0_0_checked(series);
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        out[static_cast<std::size_t>(h) - 1] = gamma0(series, h) / g0;
    }
    return out;
}

std::vector<double> rho_pr(const ReturnSeries& series, int m) {
    const std::vector<double> base = rho0(series, m);
    const double ga0 = gamma_a(series, 0);
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        const double gah = gamma_a(series, h);
        if (gah <= 0.0) {
            throw_degenerate("gamma_a(" + std::to_string(h) +
                             ") = 0: no non-zero pairs at this lag");
        }
        out[static_cast<std::size_t>(h) - 1] = base[static_cast<std::size_t>(h) - 1] * ga0 / gah;
    }
    return out;
}

std::vector<double> rho_vpr(const ReturnSeries& series, int m, const ProbabilityCurves& probs) {
    const std::vector<double> base = rho0(series, m);
    const double g0 = gamma0_0_checked(series);
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        const double gah = gamma_ar2(series, h, probs);
        if (gah <= 0.0) {
            throw_degenerate("gamma_ar2(" + std::to_string(h) + ") = 0 at this lag");
        }
        out[static_cast<std::size_t>(h) - 1] = g0 / gah * base[static_cast<std::size_t>(h) - 1];
    }
    return out;
}

AcfEstimates estimate_acf(const ReturnSeries& series, int m, const ProbabilityCurves& probs) {
    check_lag(series, m);
    AcfEstimates est;
    est.m = m;
    est.gamma0.resize(static_cast<std::size_t>(m) + 1);
    est.gamma_a.resize(static_cast<std::size_t>(m) + 1);
    for (int h = 0; h <= m; ++h) {
        est.gamma0[static_cast<std::size_t>(h)] = gamma0(series, h);
        est.gamma_a[static_cast<std::size_t>(h)] = gamma_a(series, h);
    }
    if (m == 0) return est;

    const double g0 = gamma0_0_checked(series);
    est.gamma_ar2.resize(static_cast<std::size_t>(m));
    est.rho0.resize(static_cast<std::size_t>(m));
    est.rho_pr.resize(static_cast<std::size_t>(m));
    est.rho_vpr.resize(static_cast<std::size_t>(m));
    est.scale_pr.resize(static_cast<std::size_t>(m));
    est.scale_vpr.resize(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        const std::size_t i = static_cast<std::size_t>(h) - 1;
        est.rho0[i] = est.gamma0[static_cast<std::size_t>(h)] / g0;
        const double gah = est.gamma_a[static_cast<std::size_t>(h)];
        if (gah <= 0.0) {
            throw_degenerate("gamma_a(" + std::to_string(h) +
                             ") = 0: no non-zero pairs at this lag");
        }
        est.scale_pr[i] = est.gamma_a[0] / gah;
        est.rho_pr[i] = est.rho0[i] * est.scale_pr[i];
        est.gamma_ar2[i] = gamma_ar2(series, h, probs);
        if (est.gamma_ar2[i] <= 0.0) {
            throw_degenerate("gamma_ar2(" + std::to_string(h) + ") = 0 at this lag");
        }
        est.scale_vpr[i] = g0 / est.gamma_ar2[i];
        est.rho_vpr[i] = est.scale_vpr[i] * est.rho0[i];
    }
    return est;
}

} // namespace zeroacf
