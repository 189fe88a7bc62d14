#pragma once

#include <vector>

#include "acf.hpp"
#include "series.hpp"

namespace zeroacf {

// Standard normal quantile, Acklam's rational approximation refined by one
// Halley step against erfc. Absolute error well below 1e-12.
double normal_quantile(double p);

// Heteroscedasticity-consistent covariance pieces for the corrected
// autocorrelations under the no-correlation null:
//   sigma_upsilon = n^{-1} sum_{t=m+1..n} Upsilon_t Upsilon_t',
//   Upsilon_t = (r_t r_{t-1}, ..., r_t r_{t-m})',
//   sigma_r2 = n^{-1} sum r_t^2.
// The same matrix estimates both the stationary-case and the
// rescaled-time covariance limit.
struct CovarianceEstimate {
    int m = 0;
    std::vector<double> sigma_upsilon; // m x m, row-major, symmetric PSD
    double sigma_r2 = 0.0;
    std::vector<double> scale_pr;  // gamma_a(0)/gamma_a(h)
    std::vector<double> scale_vpr; // gamma0(0)/gamma_ar2(h)

    double at(int row, int col) const {
        return sigma_upsilon[static_cast<std::size_t>(row) * static_cast<std::size_t>(m) +
                             static_cast<std::size_t>(col)];
    }
};

CovarianceEstimate upsilon_covariance(const ReturnSeries& series, int m);

// Convenience: covariance pieces plus the correction scales from a
// finished ACF pass.
CovarianceEstimate upsilon_covariance(const ReturnSeries& series, const AcfEstimates& acf);

// Half-width of the null confidence band for rho_pr(h):
//   z_{(1+level)/2} n^{-1/2} scale_pr(h) sqrt(sigma_upsilon(h,h)) / sigma_r2.
std::vector<double> ci_halfwidth_pr(const CovarianceEstimate& cov, std::size_t n, double level);

// Same for rho_vpr(h), with gamma0(0) in place of sigma_r2 (they are the
// same statistic) and the vpr scales.
std::vector<double> ci_halfwidth_vpr(const CovarianceEstimate& cov, double gamma0_0,
                                     std::size_t n, double level);

} // namespace zeroacf
