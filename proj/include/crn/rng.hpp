#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace crn {

// splitmix64 finalizer, used to spread seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic per-(trial, stream) seed so trials can run in any order
// (or in parallel) and still consume identical random sequences.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t stream) {
    return mix64(mix64(base ^ mix64(trial + 1)) ^ mix64(stream + 0x100));
}

// mt19937_64 with hand-rolled distributions. The standard distribution
// objects are implementation-defined, so sampling through them would not
// reproduce bit-for-bit across standard libraries; these helpers do.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased draw from {0, ..., n-1} by rejection of the top partial block.
    int uniform_int(int n) {
        assert(n > 0);
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t rem = ((UINT64_MAX % un) + 1) % un;
        std::uint64_t x = engine_();
        if (rem != 0) {
            const std::uint64_t cutoff = 0 - rem;  // 2^64 - rem
            while (x >= cutoff) x = engine_();
        }
        return static_cast<int>(x % un);
    }

    // Box-Muller; the spare variate is cached.
    double normal(double mean, double stddev) {
        if (has_spare_) {
            has_spare_ = false;
            return mean + stddev * spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return mean + stddev * radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace crn
