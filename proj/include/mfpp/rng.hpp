// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_RNG_HPP
#define MFPP_RNG_HPP

#include <cmath>
#include <cstdint>

namespace mfpp {

/// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-style generator: the stream is a pure function of its 64-bit
/// state seed, so substreams derived from (master seed, replicate, label)
/// are reproducible independently of scheduling.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// uniform on the open interval (0, 1); never returns 0 or 1
    double next_open01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    /// standard exponential variate
    double next_exp() { return -std::log(next_open01()); }

   private:
    std::uint64_t state_;
};

/// Fixed substream labels within one replicate.
enum class StreamLabel : std::uint64_t {
    subordinator_comp1 = 0,  // alpha1 stable component
    subordinator_comp2 = 1,  // alpha2 stable component
    poisson_layer = 2,
};

/// Derive the substream for (master seed, replicate index, label).
inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t replicate,
                            StreamLabel label) {
    std::uint64_t s = mix64(master_seed ^ 0x8C9F0B6E5A3D71C2ull);
    s = mix64(s ^ (0xA5A5A5A5DEADBEEFull + replicate));
    s = mix64(s ^ (0x123456789ABCDEF0ull + static_cast<std::uint64_t>(label)));
    return SplitMix64(s);
}

}  // namespace mfpp

#endif  // MFPP_RNG_HPP
