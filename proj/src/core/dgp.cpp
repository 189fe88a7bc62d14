#include "dgp.hpp"

#include <cmath>

#include "errors.hpp"

namespace zeroacf {

const char* dgp_case_name(DgpCase c) {
    switch (c) {
    case DgpCase::i: return "i";
    case DgpCase::ii: return "ii";
    case DgpCase::iii: return "iii";
    case DgpCase::iv: return "iv";
    }
    return "?";
}

std::optional<DgpCase> dgp_case_from_name(const std::string& name) {
    if (name == "i" || name == "1") return DgpCase::i;
    if (name == "ii" || name == "2") return DgpCase::ii;
    if (name == "iii" || name == "3") return DgpCase::iii;
    if (name == "iv" || name == "4") return DgpCase::iv;
    return std::nullopt;
}

const char* innovation_name(Innovation innovation) {
    return innovation == Innovation::correlated_ar ? "correlated" : "uncorrelated";
}

std::optional<Innovation> innovation_from_name(const std::string& name) {
    if (name == "correlated" || name == "ar") return Innovation::correlated_ar;
    if (name == "uncorrelated" || name == "product") return Innovation::uncorrelated;
    return std::nullopt;
}

namespace {

double piecewise_profile(double s, double lo, double hi, const char* what) {
    if (!(s > 0.0) || s > 1.0) {
        throw_validation(std::string(what) + " profile needs s in (0, 1]");
    }
    if (s <= 0.4) return lo;
    if (s <= 0.6) return (hi - lo) / 0.2 * s + 3.0 * lo - 2.0 * hi;
    return hi;
}

} // namespace

double variance_profile(double s, double delta1, double delta2) {
    return piecewise_profile(s, delta1, delta2, "variance");
}

double probability_profile(double s, double delta3, double delta4) {
    return piecewise_profile(s, delta3, delta4, "probability");
}

std::array<double, 4> DgpConfig::case_deltas(DgpCase c) {
    switch (c) {
    case DgpCase::i: return {0.5, 2.0, 0.3, 0.9};
    case DgpCase::ii: return {1.0, 1.0, 0.3, 0.9};
    case DgpCase::iii: return {0.5, 2.0, 0.6, 0.6};
    case DgpCase::iv: return {1.0, 1.0, 0.6, 0.6};
    }
    return {1.0, 1.0, 0.6, 0.6};
}

DgpConfig DgpConfig::for_case(DgpCase c, std::int64_t n, std::uint64_t seed,
                              Innovation innovation) {
    DgpConfig config;
    config.n = n;
    config.dgp_case = c;
    config.innovation = innovation;
    config.deltas = case_deltas(c);
    config.seed = seed;
    return config;
}

void DgpConfig::validate() const {
    if (n < 1) {
        throw_validation("trajectory length must be positive");
    }
    if (!(deltas[0] > 0.0) || !(deltas[1] > 0.0)) {
        throw_validation("delta1 and delta2 must be positive");
    }
    if (!(deltas[2] > 0.0) || deltas[2] > 1.0 || !(deltas[3] > 0.0) || deltas[3] > 1.0) {
        throw_validation("delta3 and delta4 must lie in (0, 1]");
    }
}

std::vector<double> innovation_stream(Innovation innovation, std::size_t length, Rng& rng,
                                      bool one_sided_threshold) {
    if (length < 1) {
        throw_validation("innovation stream length must be positive");
    }
    constexpr std::size_t burn = 10;
    const std::size_t total = length + burn;

    // z and the product x_t = z_t z_{t-1} z_{t-2} z_{t-3}; x[i] is defined
    // from i = 3 on.
    std::vector<double> z(total);
    for (double& v : z) v = rng.next_gaussian();
    std::vector<double> x(total, 0.0);
    for (std::size_t i = 3; i < total; ++i) {
        x[i] = z[i] * z[i - 1] * z[i - 2] * z[i - 3];
    }

    std::vector<double> y(length);
    if (innovation == Innovation::uncorrelated) {
        for (std::size_t t = 0; t < length; ++t) {
            const double xt = x[burn + t];
            const bool keep = one_sided_threshold ? (xt > 0.01) : (std::fabs(xt) > 0.01);
            y[t] = keep ? xt : 0.0;
        }
        return y;
    }

    // u_t = x_t when |x_t| and |x_{t-1}| both exceed the threshold;
    // y_t = 0.3 u_{t-1} + u_t when both u's are non-zero.
    std::vector<double> u(total, 0.0);
    for (std::size_t i = 4; i < total; ++i) {
        if (std::fabs(x[i]) > 0.01 && std::fabs(x[i - 1]) > 0.01) u[i] = x[i];
    }
    for (std::size_t t = 0; t < length; ++t) {
        const double ut = u[burn + t];
        const double ul = u[burn + t - 1];
        y[t] = (ut != 0.0 && ul != 0.0) ? 0.3 * ul + ut : 0.0;
    }
    return y;
}

ReturnSeries simulate(const DgpConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const std::size_t n = static_cast<std::size_t>(config.n);
    const std::vector<double> y =
        innovation_stream(config.innovation, n, rng, config.one_sided_threshold);

    std::vector<double> r(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double s = static_cast<double>(t + 1) / static_cast<double>(n);
        const double sigma = variance_profile(s, config.deltas[0], config.deltas[1]);
        const double g = probability_profile(s, config.deltas[2], config.deltas[3]);
        const bool a1 = rng.next_bernoulli(g);
        r[t] = a1 ? sigma * y[t] : 0.0; // avoids -0 when a1 kills a negative y
    }
    return ReturnSeries::from_returns(std::move(r));
}

} // namespace zeroacf
