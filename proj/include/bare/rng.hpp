#pragma once

#include <cstdint>

namespace bare {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/*
 * xoshiro256** seeded through splitmix64. Per-trial streams are derived
 * counter-style from (master_seed, trial_index), so aggregate results do
 * not depend on how trials are partitioned across workers.
 */
class Xoshiro256 {
  public:
    Xoshiro256() : Xoshiro256(0, 0) {}
    Xoshiro256(uint64_t master_seed, uint64_t stream_index) {
        uint64_t sm = master_seed ^ (stream_index * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
        for (auto& word : s_) word = splitmix64(sm);
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return p > 0 && uniform() < p; }

    // Unbiased uniform integer in [0, bound).
    uint32_t uniform_int(uint32_t bound) {
        uint64_t threshold = (0 - uint64_t{bound}) % bound;
        while (true) {
            uint64_t r = next();
            if (r >= threshold) return static_cast<uint32_t>(r % bound);
        }
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace bare
