#pragma once

#include <cstdint>
#include <string_view>

namespace indseq {

// splitmix64; used to expand seeds and derive child-stream seeds.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** (Blackman/Vigna). Seedable, fast, and cheap to fork into
/// decorrelated child streams, which is what per-trial workers need.
/// Every report that records a seed refers to this generator.
class Rng {
public:
    static constexpr std::string_view kName = "xoshiro256ss";

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }

    explicit Rng(std::uint64_t seed = 0) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64_next(sm);
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

    result_type operator()() { return next_u64(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Unbiased (rejects the short tail).
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return x % n;
    }

    bool coin() { return (next_u64() & 1ULL) != 0; }

    /// Deterministic child stream. Distinct (index, label) pairs give
    /// independent streams regardless of how much the parent has been used.
    Rng split(std::uint64_t index, std::uint64_t label = 0) const {
        std::uint64_t s = seed_;
        std::uint64_t h = splitmix64_next(s);
        s ^= 0x9e3779b97f4a7c15ULL * (index + 1);
        h ^= splitmix64_next(s);
        s ^= 0xd1342543de82ef95ULL * (label + 1);
        h ^= splitmix64_next(s);
        return Rng(h);
    }

    std::uint64_t split_seed(std::uint64_t index, std::uint64_t label = 0) const {
        return split(index, label).seed();
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t seed_ = 0;
    std::uint64_t state_[4] = {};
};

}  // namespace indseq
