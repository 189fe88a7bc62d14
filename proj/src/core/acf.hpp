#pragma once

#include <vector>

#include "kernel.hpp"
#include "series.hpp"

namespace zeroacf {

// gamma0(h) = n^{-1} sum_{t=h+1..n} r_t r_{t-h}. The divisor is n, not
// n-h, for every lag.
double gamma0(const ReturnSeries& series, int h);

// gamma_a(h) = n^{-1} sum_{t=h+1..n} a_t a_{t-h}.
double gamma_a(const ReturnSeries& series, int h);

// gamma_ar2(h) = (n-h)^{-1} sum_{t=h+1..n} r_t^2 p_{t,t-h} / p_t. A term
// with p_t = 0 is dropped (set to zero).
double gamma_ar2(const ReturnSeries& series, int h, const ProbabilityCurves& probs);

// Classical autocorrelations rho0(1..m) = gamma0(h)/gamma0(0).
std::vector<double> rho0(const ReturnSeries& series, int m);

// "pr" corrected autocorrelations rho_pr(h) = rho0(h) gamma_a(0)/gamma_a(h).
std::vector<double> rho_pr(const ReturnSeries& series, int m);

// "vpr" corrected autocorrelations rho_vpr(h) = gamma0(0)/gamma_ar2(h) rho0(h).
std::vector<double> rho_vpr(const ReturnSeries& series, int m, const ProbabilityCurves& probs);

// Per-lag classical and corrected autocorrelations up to lag m, plus the
// raw autocovariance pieces they are built from.
struct AcfEstimates {
    int m = 0;
    std::vector<double> gamma0;    // lags 0..m
    std::vector<double> gamma_a;   // lags 0..m
    std::vector<double> gamma_ar2; // lags 1..m
    std::vector<double> rho0;      // lags 1..m
    std::vector<double> rho_pr;    // lags 1..m
    std::vector<double> rho_vpr;   // lags 1..m
    std::vector<double> scale_pr;  // gamma_a(0)/gamma_a(h), lags 1..m
    std::vector<double> scale_vpr; // gamma0(0)/gamma_ar2(h), lags 1..m
};

AcfEstimates estimate_acf(const ReturnSeries& series, int m, const ProbabilityCurves& probs);

} // namespace zeroacf
