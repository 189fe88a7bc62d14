#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rng.hpp"
#include "series.hpp"

namespace zeroacf {

enum class DgpCase { i, ii, iii, iv };

const char* dgp_case_name(DgpCase c);
std::optional<DgpCase> dgp_case_from_name(const std::string& name);

enum class Innovation {
    correlated_ar, // y_t = 0.3 u_{t-1} + u_t over both-non-zero u pairs
    uncorrelated,  // thresholded Romano-Thombs product process
};

const char* innovation_name(Innovation innovation);
std::optional<Innovation> innovation_from_name(const std::string& name);

// Piecewise profile delta_lo on (0, 0.4], a linear ramp on (0.4, 0.6] and
// delta_hi on (0.6, 1]; continuous at both knots.
double variance_profile(double s, double delta1, double delta2);
double probability_profile(double s, double delta3, double delta4);

struct DgpConfig {
    std::int64_t n = 500;
    DgpCase dgp_case = DgpCase::iv;
    Innovation innovation = Innovation::uncorrelated;
    // Non-zero threshold for the uncorrelated variant: the default applies
    // it to |x_t|, which is the reading that reproduces P(y != 0) ~ 0.83.
    // one_sided applies it to x_t as printed, giving ~ 0.42.
    bool one_sided_threshold = false;
    std::array<double, 4> deltas{1.0, 1.0, 0.6, 0.6};
    std::uint64_t seed = 0;

    static std::array<double, 4> case_deltas(DgpCase c);
    static DgpConfig for_case(DgpCase c, std::int64_t n, std::uint64_t seed,
                              Innovation innovation = Innovation::uncorrelated);

    void validate() const;
};

// Innovation stream y_1..y_length. Both variants build on the product
// process x_t = z_t z_{t-1} z_{t-2} z_{t-3} with iid standard normal z and
// a burn-in of 10 draws before t = 1.
std::vector<double> innovation_stream(Innovation innovation, std::size_t length, Rng& rng,
                                      bool one_sided_threshold = false);

// r_t = sigma(t/n) a_{1t} y_t with a_{1t} iid Bernoulli(g(t/n)) independent
// of y. Bitwise deterministic for a given config.
ReturnSeries simulate(const DgpConfig& config);

} // namespace zeroacf
