#include "kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace zeroacf {

const char* kernel_name(KernelShape shape) {
    switch (shape) {
    case KernelShape::rectangular: return "rectangular";
    case KernelShape::epanechnikov: return "epanechnikov";
    case KernelShape::triangular: return "triangular";
    }
    return "?";
}

std::optional<KernelShape> kernel_from_name(const std::string& name) {
    if (name == "rect" || name == "rectangular" || name == "uniform")
        return KernelShape::rectangular;
    if (name == "epa" || name == "epanechnikov") return KernelShape::epanechnikov;
    if (name == "tri" || name == "triangular") return KernelShape::triangular;
    return std::nullopt;
}

double kernel_value(KernelShape shape, double z) {
    const double az = std::fabs(z);
    if (az > 1.0) return 0.0;
    switch (shape) {
    case KernelShape::rectangular: return 0.5;
    case KernelShape::epanechnikov: return 0.75 * (1.0 - z * z);
    case KernelShape::triangular: return 1.0 - az;
    }
    return 0.0;
}

BandwidthGrid BandwidthGrid::default_for(std::size_t n) {
    BandwidthGrid grid;
    grid.hi = 0.5;
    grid.lo = std::min(20.0 / static_cast<double>(n), grid.hi);
    grid.size = 20;
    return grid;
}

std::vector<double> BandwidthGrid::points() const {
    if (size <= 0 || !(lo > 0.0) || !(hi >= lo)) {
        throw_validation("bandwidth grid must satisfy 0 < lo <= hi and size >= 1");
    }
    if (hi > 1.0) {
        throw_validation("bandwidths must lie in (0, 1]");
    }
    std::vector<double> pts(static_cast<std::size_t>(size));
    if (size == 1 || lo == hi) {
        pts.assign(static_cast<std::size_t>(size), hi);
        pts.front() = lo;
        pts.back() = hi;
        if (size == 1) pts.front() = hi;
        return pts;
    }
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < size; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(size - 1);
        pts[static_cast<std::size_t>(i)] = std::exp(llo + f * (lhi - llo));
    }
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

namespace {

void check_bandwidth(double b) {
    if (!(b > 0.0) || b > 1.0) {
        throw_validation("bandwidth must lie in (0, 1]");
    }
}

// Half width of the kernel support in index units: K((t-j)/(nb)) vanishes
// for |t-j| > n*b.
std::size_t window_radius(std::size_t n, double b) {
    const double r = static_cast<double>(n) * b;
    return static_cast<std::size_t>(std::floor(r));
}

} // namespace

std::vector<double> loo_weights(std::size_t t, std::size_t n, double b, KernelShape shape) {
    check_bandwidth(b);
    if (t >= n) {
        throw_validation("weight index out of range");
    }
    std::vector<double> weights(n, 0.0);
    const double nb = static_cast<double>(n) * b;
    double total = 0.0;
    const std::size_t radius = window_radius(n, b);
    const std::size_t lo = t > radius ? t - radius : 0;
    const std::size_t hi = std::min(n - 1, t + radius);
    for (std::size_t j = lo; j <= hi; ++j) {
        if (j == t) continue;
        const double k = kernel_value(shape, (static_cast<double>(t) - static_cast<double>(j)) / nb);
        weights[j] = k;
        total += k;
    }
    if (total <= 0.0) {
        throw_degenerate("kernel window around t=" + std::to_string(t + 1) +
                         " is empty; increase the bandwidth");
    }
    for (double& w : weights) w /= total;
    return weights;
}

ProbabilityCurves smooth_probabilities(std::span<const std::uint8_t> a, int m,
                                       const KernelPlan& plan) {
    const std::size_t n = a.size();
    if (m < 0 || static_cast<std::size_t>(m) >= n) {
        throw_validation("max lag must satisfy 0 <= m < n");
    }
    check_bandwidth(plan.b0);
    if (plan.bh.size() < static_cast<std::size_t>(m)) {
        throw_validation("kernel plan is missing per-lag bandwidths");
    }

    ProbabilityCurves curves;
    curves.plan = plan;
    curves.p_t.resize(n);
    curves.p_th.resize(static_cast<std::size_t>(m));

    // Pair indicator streams a_j a_{j-h}, stored at index j.
    std::vector<std::vector<std::uint8_t>> pair(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        auto& ph = pair[static_cast<std::size_t>(h) - 1];
        ph.assign(n, 0);
        for (std::size_t j = static_cast<std::size_t>(h); j < n; ++j) {
            ph[j] = static_cast<std::uint8_t>(a[j] & a[j - static_cast<std::size_t>(h)]);
        }
        curves.p_th[static_cast<std::size_t>(h) - 1].resize(n - static_cast<std::size_t>(h));
    }

    // One pass per distinct bandwidth value would also work, but the
    // windows are short enough that recomputing kernel values per (t, b)
    // keeps the code straightforward.
    auto smooth_one = [&](double b, const std::vector<std::uint8_t>* stream, int h,
                          std::vector<double>& out) {
        const double nb = static_cast<double>(n) * b;
        const std::size_t radius = window_radius(n, b);
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t lo = t > radius ? t - radius : 0;
            const std::size_t hi = std::min(n - 1, t + radius);
            double total = 0.0;
            double num = 0.0;
            for (std::size_t j = lo; j <= hi; ++j) {
                if (j == t) continue;
                const double k =
                    kernel_value(plan.kernel,
                                 (static_cast<double>(t) - static_cast<double>(j)) / nb);
                total += k;
                if (stream) {
                    num += k * static_cast<double>((*stream)[j]);
                } else {
                    num += k * static_cast<double>(a[j]);
                }
            }
            if (total <= 0.0) {
                throw_degenerate("kernel window around t=" + std::to_string(t + 1) +
                                 " is empty; increase the bandwidth");
            }
            if (h == 0) {
                out[t] = num / total;
            } else if (t >= static_cast<std::size_t>(h)) {
                out[t - static_cast<std::size_t>(h)] = num / total;
            }
        }
    };

    smooth_one(plan.b0, nullptr, 0, curves.p_t);
    for (int h = 1; h <= m; ++h) {
        smooth_one(plan.bh[static_cast<std::size_t>(h) - 1], &pair[static_cast<std::size_t>(h) - 1],
                   h, curves.p_th[static_cast<std::size_t>(h) - 1]);
    }
    return curves;
}

std::vector<double> loocv_curve(std::span<const std::uint8_t> a, int h,
                                std::span<const double> grid, KernelShape shape,
                                bool paper_target) {
    const std::size_t n = a.size();
    if (h < 0 || static_cast<std::size_t>(h) >= n) {
        throw_validation("lag must satisfy 0 <= h < n");
    }
    if (grid.empty()) {
        throw_validation("bandwidth grid is empty");
    }

    // Predictor stream: a_j for h = 0, a_j a_{j-h} otherwise. The target
    // lag may differ from the predictor lag only in paper mode for h = 0.
    const int target_lag = (h == 0 && paper_target && n > 1) ? 1 : h;
    std::vector<std::uint8_t> stream(n, 0);
    if (h == 0) {
        std::copy(a.begin(), a.end(), stream.begin());
    } else {
        for (std::size_t j = static_cast<std::size_t>(h); j < n; ++j) {
            stream[j] = static_cast<std::uint8_t>(a[j] & a[j - static_cast<std::size_t>(h)]);
        }
    }

    std::vector<double> cv(grid.size(), std::numeric_limits<double>::infinity());
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        const double b = grid[gi];
        check_bandwidth(b);
        const double nb = static_cast<double>(n) * b;
        const std::size_t radius = window_radius(n, b);
        double sum = 0.0;
        bool empty = false;
        for (std::size_t t = static_cast<std::size_t>(target_lag); t < n; ++t) {
            const std::size_t lo = t > radius ? t - radius : 0;
            const std::size_t hi = std::min(n - 1, t + radius);
            double total = 0.0;
            double num = 0.0;
            // The estimator already has a zero diagonal weight, so the
            // leave-one-out prediction at t is the estimator itself.
            // stream[j] is zero for j < h, which drops the j <= h terms of
            // the pair estimator.
            for (std::size_t j = lo; j <= hi; ++j) {
                if (j == t) continue;
                const double k = kernel_value(
                    shape, (static_cast<double>(t) - static_cast<double>(j)) / nb);
                total += k;
                num += k * static_cast<double>(stream[j]);
            }
            if (total <= 0.0) {
                empty = true;
                break;
            }
            double target = static_cast<double>(a[t]);
            if (target_lag > 0) {
                target = static_cast<double>(a[t] & a[t - static_cast<std::size_t>(target_lag)]);
            }
            const double diff = num / total - target;
            sum += diff * diff;
        }
        if (!empty) cv[gi] = sum;
    }
    return cv;
}

double select_bandwidth_loocv(std::span<const std::uint8_t> a, int h,
                              std::span<const double> grid, KernelShape shape,
                              bool paper_target) {
    const std::vector<double> cv = loocv_curve(a, h, grid, shape, paper_target);
    double best_cv = std::numeric_limits<double>::infinity();
    double best_b = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::isinf(cv[i])) continue;
        // Ties break toward the largest bandwidth (smoothest fit).
        if (!found || cv[i] < best_cv || (cv[i] == best_cv && grid[i] > best_b)) {
            best_cv = cv[i];
            best_b = grid[i];
            found = true;
        }
    }
    if (!found) {
        throw_degenerate("every grid bandwidth yields an empty kernel window");
    }
    return best_b;
}

KernelPlan select_plan_loocv(std::span<const std::uint8_t> a, int m, KernelShape shape,
                             const BandwidthGrid& grid, bool paper_target) {
    KernelPlan plan;
    plan.kernel = shape;
    plan.loocv = true;
    plan.grid = grid;
    plan.paper_cv_target = paper_target;
    const std::vector<double> pts = grid.points();
    plan.b0 = select_bandwidth_loocv(a, 0, pts, shape, paper_target);
    plan.bh.resize(static_cast<std::size_t>(m));
    for (int h = 1; h <= m; ++h) {
        plan.bh[static_cast<std::size_t>(h) - 1] =
            select_bandwidth_loocv(a, h, pts, shape, false);
    }
    return plan;
}

} // namespace zeroacf
