#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zeroacf {

enum class KernelShape {
    rectangular,
    epanechnikov,
    triangular,
};

const char* kernel_name(KernelShape shape);
std::optional<KernelShape> kernel_from_name(const std::string& name);

// K(z): compactly supported on [-1, 1], integrates to 1.
double kernel_value(KernelShape shape, double z);

struct BandwidthGrid {
    double lo = 0.0; // <= 0 selects the default grid for the sample size
    double hi = 0.0;
    int size = 0;

    // 20 log-spaced bandwidths from a ~20-observation window up to half
    // the sample.
    static BandwidthGrid default_for(std::size_t n);

    std::vector<double> points() const;
};

// How the probability curves are smoothed: kernel shape plus one bandwidth
// for p_t (b0) and one per lag h for p_{t,t-h}. Bandwidths live in rescaled
// time (0, 1].
struct KernelPlan {
    KernelShape kernel = KernelShape::epanechnikov;
    double b0 = 0.0;
    std::vector<double> bh; // index h-1 for lag h = 1..m
    bool loocv = false;     // true when the bandwidths came from LOOCV
    BandwidthGrid grid;     // grid used when loocv is true
    // LOOCV target for b0: the marginal indicator a_t (default), or the
    // pair product a_t a_{t-1} exactly as the criterion is printed.
    bool paper_cv_target = false;
};

// Leave-one-out smoothed probabilities. p_t has one entry per observation;
// p_th[h-1] holds p_{t,t-h} for t = h..n-1 (0-based).
struct ProbabilityCurves {
    std::vector<double> p_t;
    std::vector<std::vector<double>> p_th;
    KernelPlan plan;

    double pair_prob(int h, std::size_t t) const { return p_th[static_cast<std::size_t>(h) - 1][t - static_cast<std::size_t>(h)]; }
};

// Normalized leave-one-out weights w_tj = K_tj / sum_i K_ti with
// K_tj = K((t-j)/(n b)) for j != t and K_tt = 0. `t` is 0-based; the
// index difference is what enters the kernel, so the basis is immaterial.
// Throws when every off-diagonal kernel value is zero (window too small).
std::vector<double> loo_weights(std::size_t t, std::size_t n, double b, KernelShape shape);

// p_t = sum_j w_tj a_j and p_{t,t-h} = sum_{j>=h} w_tj a_j a_{j-h} for
// h = 1..m, with per-lag bandwidths from the plan (selection must already
// have happened).
ProbabilityCurves smooth_probabilities(std::span<const std::uint8_t> a, int m,
                                       const KernelPlan& plan);

// Leave-one-out cross validation curve for lag h. For h = 0 the predictor
// is p_t and the target a_t (or a_t a_{t-1} in paper_target mode); for
// h >= 1 the predictor is p_{t,t-h} and the target a_t a_{t-h}. Bandwidths
// whose window is empty get CV = +infinity.
std::vector<double> loocv_curve(std::span<const std::uint8_t> a, int h,
                                std::span<const double> grid, KernelShape shape,
                                bool paper_target = false);

// Grid bandwidth minimizing the CV criterion; ties break toward the
// largest bandwidth. Throws when every grid point has an empty window.
double select_bandwidth_loocv(std::span<const std::uint8_t> a, int h,
                              std::span<const double> grid, KernelShape shape,
                              bool paper_target = false);

// Full plan selection: b0 plus one bh per lag 1..m, each independently.
KernelPlan select_plan_loocv(std::span<const std::uint8_t> a, int m, KernelShape shape,
                             const BandwidthGrid& grid, bool paper_target = false);

} // namespace zeroacf
