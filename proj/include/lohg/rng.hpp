#pragma once

#include <cstdint>
#include <random>

namespace lohg {

// All randomized components draw from this wrapper so that instances are
// reproducible bit-for-bit across platforms. The generator algorithm is part
// of the external contract (see README): std::mt19937_64 seeded directly,
// with bounded draws obtained by rejection sampling (never by
// std::uniform_int_distribution, whose output is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform in [0, n), n >= 1; rejection over the top 64-bit range
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return gen_() >> 63; }

private:
    std::mt19937_64 gen_;
};

// SplitMix64 finalizer; used to derive independent child seeds for
// (size, index) streams in the bench harness and generators.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    return mix_seed(master ^ mix_seed(a ^ mix_seed(b)));
}

} // namespace lohg
