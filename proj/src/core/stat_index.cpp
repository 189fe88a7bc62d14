#include "stat_index.hpp"

#include <string>

#include "errors.hpp"

namespace zeroacf {

double delta_h(const ReturnSeries& series, int h, const ProbabilityCurves& probs) {
    const std::size_t n = series.size();
    if (h < 1 || static_cast<std::size_t>(h) >= n) {
        throw_validation("lag " + std::to_string(h) + " is invalid for a series of length " +
                         std::to_string(n));
    }
    const auto r = series.values();
    const auto a = series.indicator();

    double sum_r2 = 0.0;
    double sum_a = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        sum_r2 += r[t] * r[t];
        sum_a += static_cast<double>(a[t]);
    }
    double sum_weighted = 0.0;
    double sum_pairs = 0.0;
    for (std::size_t t = static_cast<std::size_t>(h); t < n; ++t) {
        const double pt = probs.p_t[t];
        if (pt != 0.0) {
            sum_weighted += r[t] * r[t] * probs.pair_prob(h, t) / pt;
        }
        sum_pairs += static_cast<double>(a[t] & a[t - static_cast<std::size_t>(h)]);
    }

    const double n_d = static_cast<double>(n);
    const double nh_d = static_cast<double>(n - static_cast<std::size_t>(h));
    const double denom_r2 = sum_weighted / nh_d;
    const double denom_pairs = sum_pairs / nh_d;
    if (denom_r2 <= 0.0) {
        throw_degenerate("delta_" + std::to_string(h) +
                         ": weighted squared-return denominator is zero");
    }
    if (denom_pairs <= 0.0) {
        throw_degenerate("delta_" + std::to_string(h) + ": non-zero pair denominator is zero");
    }
    return (sum_r2 / n_d) / denom_r2 - (sum_a / n_d) / denom_pairs;
}

double kappa_from_deltas(std::span<const double> deltas) {
    double kappa = 0.0;
    for (double d : deltas) kappa += d * d;
    return kappa;
}

IndexReport kappa_index(const ReturnSeries& series, int m, const ProbabilityCurves& probs) {
    IndexReport report;
    report.m = m;
    report.delta.resize(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        report.delta[static_cast<std::size_t>(h) - 1] = delta_h(series, h, probs);
    }
    report.kappa = kappa_from_deltas(report.delta);
    return report;
}

} // namespace zeroacf
