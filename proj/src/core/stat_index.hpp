#pragma once

#include <span>
#include <vector>

#include "kernel.hpp"
#include "series.hpp"

namespace zeroacf {

// Discrepancy between the variance-weighted and probability-only
// correction ratios at lag h:
//   delta_h = [n^{-1} sum r_t^2] / [(n-h)^{-1} sum_{t>h} r_t^2 p_{t,t-h}/p_t]
//           - [n^{-1} sum a_t] / [(n-h)^{-1} sum_{t>h} a_t a_{t-h}].
double delta_h(const ReturnSeries& series, int h, const ProbabilityCurves& probs);

struct IndexReport {
    int m = 0;
    std::vector<double> delta; // lags 1..m
    double kappa = 0.0;        // sum of squared deltas
};

double kappa_from_deltas(std::span<const double> deltas);

// kappa_m = sum_{h=1..m} delta_h^2, reusing the same smoothed curves as
// the vpr correction so index and estimator stay consistent.
IndexReport kappa_index(const ReturnSeries& series, int m, const ProbabilityCurves& probs);

} // namespace zeroacf
