#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace uavloc {

/// Seeded random stream used by all samplers. Snapshot streams are derived
/// from (master seed, snapshot index) with a splitmix64 mix, so snapshot i
/// always sees the same draws no matter which worker evaluates it or in
/// which order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    static RngStream for_snapshot(std::uint64_t master_seed, std::uint64_t snapshot_index) {
        return RngStream(mix64(master_seed + 0x9E3779B97F4A7C15ULL * (snapshot_index + 1)));
    }

    /// Uniform draw in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller. Always consumes exactly two uniforms
    /// (no cached second value), keeping the draw count per call fixed.
    double normal() {
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    std::uint64_t raw() { return gen_(); }

private:
    static constexpr double two_pi = 6.283185307179586476925286766559;

    // splitmix64 output function
    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
};

} // namespace uavloc
