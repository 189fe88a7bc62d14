#pragma once

#include <limits>
#include <string>
#include <vector>

#include "acf.hpp"
#include "inference.hpp"
#include "kernel.hpp"
#include "series.hpp"
#include "stat_index.hpp"

namespace zeroacf {

struct AnalyzeOptions {
    int max_lag = 1; // clamped to floor(n/4) with a warning
    KernelShape kernel = KernelShape::epanechnikov;
    // > 0: fixed bandwidth for every curve; <= 0: LOOCV on `grid`.
    double bandwidth = 0.0;
    BandwidthGrid grid; // default grid when unset
    double level = 0.95;
    bool demean = false;
    bool paper_cv_target = false;
    // Null reference quantile for kappa (e.g. a simulated 95th percentile);
    // drives the advisory line when provided.
    double kappa_ref = std::numeric_limits<double>::quiet_NaN();
};

struct AnalysisReport {
    std::size_t n = 0;
    double zero_fraction = 0.0;
    double zero_tolerance = 0.0;
    bool demeaned = false;
    int m = 0;
    double level = 0.95;
    AcfEstimates acf;
    CovarianceEstimate cov;
    std::vector<double> ci_halfwidth_pr;
    std::vector<double> ci_halfwidth_vpr;
    IndexReport index;
    KernelPlan plan;
    bool plan_used = false; // false when m = 0 (no smoothing happened)
    std::string advisory;
    std::vector<std::string> warnings;
};

AnalysisReport analyze(const ReturnSeries& series, const AnalyzeOptions& options);

// Stable JSON rendering (sorted keys, 2-space indent, trailing newline).
std::string analysis_report_json(const AnalysisReport& report);

// Per-lag CSV table.
std::string analysis_report_csv(const AnalysisReport& report);

} // namespace zeroacf
