#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgp.hpp"
#include "kernel.hpp"

namespace zeroacf {

struct McConfig {
    DgpConfig dgp;                   // n is taken from `lengths`
    std::vector<std::int64_t> lengths{500};
    std::int64_t trials = 1000;
    int max_lag = 1;
    double level = 0.95;
    KernelShape kernel = KernelShape::epanechnikov;
    // > 0: fixed bandwidth for every curve (fast mode); <= 0: per-trial
    // LOOCV selection on `grid` (default grid when unset).
    double bandwidth = 0.0;
    BandwidthGrid grid;
    bool paper_cv_target = false;
    int threads = 0; // <= 0: hardware concurrency (ZEROACF_THREADS caps)

    void validate() const;
};

// Five-number summary plus mean/sd; exceedance only where a confidence
// band is defined (pr and vpr).
struct MethodSummary {
    double mean = 0.0;
    double sd = 0.0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    std::optional<double> exceedance;
};

struct McRun {
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::int64_t error_trials = 0;
    MethodSummary rho0;
    MethodSummary pr;
    MethodSummary vpr;
    MethodSummary kappa;
};

struct McSummary {
    McConfig config;
    std::vector<McRun> runs;
};

// Type-7 (linear interpolation) quantile of a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double p);

// Simulates `trials` independent trajectories per length, estimates
// rho0/pr/vpr at lag 1, the CI exceedance flags and kappa_1, and
// aggregates. Trial t uses seed ^ t; estimator failures are counted, not
// fatal. Aggregation is by trial index, so results do not depend on the
// worker count.
McSummary run_monte_carlo(const McConfig& config);

std::string mc_summary_csv(const McSummary& summary);
std::string mc_summary_json(const McSummary& summary);

} // namespace zeroacf
