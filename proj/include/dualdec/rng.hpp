#pragma once

#include <cmath>
#include <cstdint>

namespace dualdec {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64. Self-contained so that simulation
// output is identical across compilers and thread counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_)
            word = splitmix64(sm);
    }

    // Independent stream for one Monte-Carlo trial; (seed, stream, trial)
    // fully determine the sequence, so trials can run on any thread.
    static Rng for_trial(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64(sm) ^ (stream * 0x9e3779b97f4a7c15ull);
        std::uint64_t b = splitmix64(sm) ^ (trial * 0xd1b54a32d192ed03ull);
        std::uint64_t mix = a;
        mix ^= splitmix64(b);
        return Rng(mix ^ splitmix64(a) ^ trial);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound).
    std::uint32_t below(std::uint32_t bound) {
        std::uint64_t x = next_u64() >> 32;
        std::uint64_t m = x * bound;
        std::uint32_t lo = static_cast<std::uint32_t>(m);
        if (lo < bound) {
            std::uint32_t threshold = (0u - bound) % bound;
            while (lo < threshold) {
                x = next_u64() >> 32;
                m = x * bound;
                lo = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // N(0, 1) via Box-Muller; second value cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace dualdec
