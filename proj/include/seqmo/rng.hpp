#pragma once

#include <cstdint>
#include <stdexcept>

namespace seqmo {

// Seeded 64-bit generator (xoshiro256**) with explicit stream splitting.
// Identical seeds produce identical draw sequences on every platform; all
// draw methods are fully specified bit-level operations, no libstdc++
// distribution objects involved.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {
        // expand the seed into four words via splitmix64
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in [0, 1), 53 random mantissa bits
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // unbiased uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("RngStream::next_below: n must be positive");
        if ((n & (n - 1)) == 0) return next_u64() & (n - 1);  // power of two
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return v % n;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Derive an independent sub-stream from the creation seed (not the
    // current state), so the derivation is stable under draw reordering.
    RngStream split(std::uint64_t stream_id) const {
        std::uint64_t x = seed_ ^ (0x9E3779B97F4A7C15ULL + stream_id * 0xBF58476D1CE4E5B9ULL);
        std::uint64_t h = splitmix64(x);
        return RngStream(h);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_[4];
};

}  // namespace seqmo
