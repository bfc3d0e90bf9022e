#ifndef HARDCORE_RNG_HPP
#define HARDCORE_RNG_HPP

#include <cstdint>
#include <random>

namespace hardcore {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Seedable 64-bit generator with per-stream derivation. Trajectories are
/// bit-for-bit reproducible from (seed, stream): the engine is mt19937_64
/// (output sequence fixed by the standard) and all variate mappings below
/// avoid std distributions, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0)
        : eng_(derive(seed, stream)) {}

    uint64_t next() { return eng_(); }

    /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
    uint32_t uniform_below(uint32_t n) {
        uint64_t threshold = (~uint64_t{0} / n) * n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= threshold);
        return static_cast<uint32_t>(x % n);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    static uint64_t derive(uint64_t seed, uint64_t stream) {
        uint64_t s = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
        return splitmix64(s);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hardcore

#endif
