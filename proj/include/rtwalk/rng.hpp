#pragma once

#include <cmath>
#include <cstdint>

namespace rtwalk {

// SplitMix64, used to expand (seed, stream) into generator state.
inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** with explicit (seed, stream) construction. Identical
// (seed, stream) pairs reproduce identical output sequences on every
// platform; distinct streams are decorrelated by the SplitMix64 expansion.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {
        uint64_t sm = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        for (auto& w : s_) w = splitmix64(sm);
        // all-zero state is invalid for xoshiro; SplitMix64 cannot emit
        // four zero words in a row, but keep a guard anyway
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }

    Rng child(uint64_t i) const {
        uint64_t sm = stream_ * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL;
        uint64_t sub = splitmix64(sm) ^ i;
        return Rng(seed_, sub);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // [0,1) with 53 random bits
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    // uniform on {0, ..., n-1}, Lemire's unbiased multiply-shift rejection
    uint64_t uniform_below(uint64_t n) {
        __uint128_t m = (__uint128_t)next_u64() * n;
        uint64_t lo = (uint64_t)m;
        if (lo < n) {
            uint64_t t = -n % n;
            while (lo < t) {
                m = (__uint128_t)next_u64() * n;
                lo = (uint64_t)m;
            }
        }
        return (uint64_t)(m >> 64);
    }

    int uniform_int(int lo, int hi) { return lo + (int)uniform_below((uint64_t)(hi - lo + 1)); }

    bool bernoulli(double p) { return uniform01() < p; }

    // P(X = j) = (1-p)^j p on {0, 1, ...}
    int64_t geometric0(double p) {
        if (p >= 1.0) return 0;
        double u = 1.0 - uniform01();  // (0, 1]
        return (int64_t)std::floor(std::log(u) / std::log1p(-p));
    }

    // P(X = j) = (1-p)^{j-1} p on {1, 2, ...}
    int64_t geometric1(double p) { return geometric0(p) + 1; }

    // Knuth's product method; fine for the small means used here
    int64_t poisson(double mean) {
        const double limit = std::exp(-mean);
        double prod = uniform01();
        int64_t k = 0;
        while (prod > limit) {
            prod *= uniform01();
            ++k;
        }
        return k;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    uint64_t seed_;
    uint64_t stream_;
};

}  // namespace rtwalk
