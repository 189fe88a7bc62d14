#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "kernel.hpp"
#include "rng.hpp"
#include "series.hpp"

namespace testutil {

// Straight transcription of the defining formulas: materialize the full
// leave-one-out weight vector for every t. Independent of the windowed
// fast path in the library.
inline std::vector<double> naive_p_t(std::span<const std::uint8_t> a, double b,
                                     zeroacf::KernelShape kernel) {
    const std::size_t n = a.size();
    std::vector<double> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::vector<double> w = zeroacf::loo_weights(t, n, b, kernel);
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += w[j] * static_cast<double>(a[j]);
        out[t] = sum;
    }
    return out;
}

inline std::vector<double> naive_p_th(std::span<const std::uint8_t> a, int h, double b,
                                      zeroacf::KernelShape kernel) {
    const std::size_t n = a.size();
    std::vector<double> out(n - static_cast<std::size_t>(h));
    for (std::size_t t = static_cast<std::size_t>(h); t < n; ++t) {
        const std::vector<double> w = zeroacf::loo_weights(t, n, b, kernel);
        double sum = 0.0;
        for (std::size_t j = static_cast<std::size_t>(h); j < n; ++j) {
            sum += w[j] * static_cast<double>(a[j]) *
                   static_cast<double>(a[j - static_cast<std::size_t>(h)]);
        }
        out[t - static_cast<std::size_t>(h)] = sum;
    }
    return out;
}

// Random test series with a controllable share of exact zeros.
inline std::vector<double> random_returns(zeroacf::Rng& rng, std::size_t n, double zero_share) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.next_double() < zero_share) {
            values[i] = 0.0;
        } else {
            values[i] = rng.next_gaussian();
            if (values[i] == 0.0) values[i] = 1.0;
        }
    }
    return values;
}

// Smallest eigenvalue of a small symmetric matrix via cyclic Jacobi sweeps.
inline double min_eigenvalue(std::vector<double> m, int dim) {
    auto at = [&](int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                 static_cast<std::size_t>(j)];
    };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < dim; ++p)
            for (int q = p + 1; q < dim; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < dim; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                if (at(p, q) == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < dim; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < dim; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double min_ev = at(0, 0);
    for (int i = 1; i < dim; ++i) min_ev = std::min(min_ev, at(i, i));
    return min_ev;
}

} // namespace testutil
