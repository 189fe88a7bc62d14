#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace zeroacf {

// SplitMix64 (Steele, Lea & Flood 2014), the generator behind
// java.util.SplittableRandom. 64-bit state, 64-bit output, period 2^64.
// Chosen because the whole algorithm fits in a dozen lines, is fully
// specified by three constants, and gives bit-identical streams on every
// platform. Simulation trials are seeded as seed ^ trial_index; the output
// mixer decorrelates such nearby seeds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double next_double_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via the trigonometric Box-Muller transform. Two
    // uniforms yield two normals; the spare is cached. No rejection step,
    // so the draw count per call is fixed and replayable.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = next_double_open();
        const double u2 = next_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    bool next_bernoulli(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace zeroacf
