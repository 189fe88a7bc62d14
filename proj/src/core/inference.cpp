#include "inference.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace zeroacf {

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw_validation("normal quantile needs p in (0, 1)");
    }

    // Acklam (2003) coefficients.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Halley refinement using Phi(x) via erfc brings the approximation
    // down to machine precision.
    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

CovarianceEstimate upsilon_covariance(const ReturnSeries& series, int m) {
    const std::size_t n = series.size();
    if (m < 0 || static_cast<std::size_t>(m) >= n) {
        throw_validation("lag " + std::to_string(m) + " is invalid for a series of length " +
                         std::to_string(n));
    }
    CovarianceEstimate cov;
    cov.m = m;
    cov.sigma_upsilon.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
    const auto r = series.values();
    double sum2 = 0.0;
    for (double v : r) sum2 += v * v;
    cov.sigma_r2 = sum2 / static_cast<double>(n);

    if (m == 0) return cov;
    std::vector<double> upsilon(static_cast<std::size_t>(m));
    for (std::size_t t = static_cast<std::size_t>(m); t < n; ++t) {
        for (int i = 0; i < m; ++i) {
            upsilon[static_cast<std::size_t>(i)] =
                r[t] * r[t - static_cast<std::size_t>(i) - 1];
        }
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) {
                cov.sigma_upsilon[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                                  static_cast<std::size_t>(j)] +=
                    upsilon[static_cast<std::size_t>(i)] * upsilon[static_cast<std::size_t>(j)];
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const double v = cov.sigma_upsilon[static_cast<std::size_t>(i) *
                                                   static_cast<std::size_t>(m) +
                                               static_cast<std::size_t>(j)] /
                             static_cast<double>(n);
            cov.sigma_upsilon[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                              static_cast<std::size_t>(j)] = v;
            cov.sigma_upsilon[static_cast<std::size_t>(j) * static_cast<std::size_t>(m) +
                              static_cast<std::size_t>(i)] = v;
        }
    }
    return cov;
}

CovarianceEstimate upsilon_covariance(const ReturnSeries& series, const AcfEstimates& acf) {
    CovarianceEstimate cov = upsilon_covariance(series, acf.m);
    cov.scale_pr = acf.scale_pr;
    cov.scale_vpr = acf.scale_vpr;
    return cov;
}

namespace {

void check_level(double level) {
    if (!(level > 0.0) || !(level < 1.0)) {
        throw_validation("confidence level must lie in (0, 1)");
    }
}

} // namespace

std::vector<double> ci_halfwidth_pr(const CovarianceEstimate& cov, std::size_t n, double level) {
    check_level(level);
    if (cov.sigma_r2 <= 0.0) {
        throw_degenerate("sigma_r2 = 0: the series has no non-zero returns");
    }
    if (cov.scale_pr.size() != static_cast<std::size_t>(cov.m)) {
        throw_validation("covariance estimate is missing pr scales");
    }
    const double z = normal_quantile(0.5 * (1.0 + level));
    const double root_n = std::sqrt(static_cast<double>(n));
    std::vector<double> out(static_cast<std::size_t>(cov.m));
    for (int h = 1; h <= cov.m; ++h) {
        const std::size_t i = static_cast<std::size_t>(h) - 1;
        out[i] = z / root_n * cov.scale_pr[i] * std::sqrt(cov.at(h - 1, h - 1)) / cov.sigma_r2;
    }
    return out;
}

std::vector<double> ci_halfwidth_vpr(const CovarianceEstimate& cov, double gamma0_0,
                                     std::size_t n, double level) {
    check_level(level);
    if (gamma0_0 <= 0.0) {
        throw_degenerate("gamma0(0) = 0: the series has no non-zero returns");
    }
    if (cov.scale_vpr.size() != static_cast<std::size_t>(cov.m)) {
        throw_validation("covariance estimate is missing vpr scales");
    }
    const double z = normal_quantile(0.5 * (1.0 + level));
    const double root_n = std::sqrt(static_cast<double>(n));
    std::vector<double> out(static_cast<std::size_t>(cov.m));
    for (int h = 1; h <= cov.m; ++h) {
        const std::size_t i = static_cast<std::size_t>(h) - 1;
        out[i] = z / root_n * cov.scale_vpr[i] * std::sqrt(cov.at(h - 1, h - 1)) / gamma0_0;
    }
    return out;
}

} // namespace zeroacf
