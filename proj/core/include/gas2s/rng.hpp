#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "gas2s/errors.hpp"

namespace gas2s {

// splitmix64 step; the standard mixer used to expand and combine seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a2c479e1d92dULL;
    return z ^ (z >> 31);
}

// Order-sensitive combination of labeled seed components. Used everywhere a
// subsystem seed is derived from (run seed, epoch, query index, ...) so that
// results do not depend on thread scheduling or batch partitioning.
inline uint64_t hash_seed(std::initializer_list<uint64_t> parts) {
    uint64_t s = 0x8f1bbcdcbfa53e0bULL;
    for (uint64_t p : parts) {
        s ^= p + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
        uint64_t t = s;
        s = splitmix64(t);
    }
    return s;
}

// xoshiro256** by Blackman & Vigna. Small, fast, and the state serializes as
// four words, which the trainer needs for exact checkpoint resume.
class Rng {
public:
    explicit Rng(uint64_t seed = 0) { reseed(seed); }

    void reseed(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : state_) w = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound) without modulo bias.
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) throw ArgError("Rng::next_below: bound must be positive");
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normal via Box-Muller.
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Normal(0, std) resampled into [-2 std, 2 std].
    double next_trunc_normal(double std_dev) {
        for (;;) {
            double v = next_normal() * std_dev;
            if (std::fabs(v) <= 2.0 * std_dev) return v;
        }
    }

    std::array<uint64_t, 4> state() const { return state_; }
    void set_state(const std::array<uint64_t, 4>& s) { state_ = s; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<uint64_t, 4> state_{};
};

} // namespace gas2s
