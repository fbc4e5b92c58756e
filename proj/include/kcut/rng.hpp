#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace kcut {

// Deterministic pseudo-random stream built on the SplitMix64 finalizer.
//
// A stream is addressed by (seed, stream_id): the starting state is a fixed
// mix of the two, and successive outputs walk the golden-ratio orbit through
// the finalizer.  The construction uses integer arithmetic only, so the same
// (seed, stream_id) yields the same draws on every platform and under any
// scheduling of replicas.  Standard-library distributions are deliberately
// avoided: their output sequences are implementation-defined.
class Stream {
public:
    Stream(uint64_t seed, uint64_t stream_id) {
        state_ = mix(mix(seed + kGolden) ^ mix(stream_id + kStreamSalt));
    }

    uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Exponential(1) by inversion; uniform()=0 maps to 0.
    double exponential() {
        return -std::log1p(-uniform());
    }

    // Uniform on {0, ..., n-1} via 128-bit multiply-shift.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // SplitMix64 output function.
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Stable sub-seed for a named experiment: FNV-1a over the tag folded
    // into the master seed.  Used to keep independent measurements on
    // disjoint streams without manual id bookkeeping.
    static uint64_t derive(uint64_t seed, std::string_view tag) {
        uint64_t h = 1469598103934665603ull ^ mix(seed);
        for (unsigned char c : tag) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return mix(h);
    }

private:
    static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr uint64_t kStreamSalt = 0x452821E638D01377ull;

    uint64_t state_;
};

} // namespace kcut
