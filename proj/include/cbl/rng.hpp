#pragma once

#include <cstdint>
#include <vector>

namespace cbl {

// Counter-based deterministic generator (splitmix64 finalizer over a
// seed+counter stream). The whole project draws randomness through this
// type so that every artifact is a pure function of its recorded seeds.
//
// Derivation rule for sub-streams: child = derive(master, a, b) chains the
// finalizer over master, a, b in that order. Replicates derived this way
// are independent of evaluation order.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static uint64_t derive(uint64_t master, uint64_t a) { return mix(mix(master) ^ a); }

    static uint64_t derive(uint64_t master, uint64_t a, uint64_t b) {
        return mix(derive(master, a) ^ b);
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Unbiased integer in [0, n) via 128-bit multiply (n > 0).
    uint64_t below(uint64_t n) {
        using u128 = unsigned __int128;
        uint64_t x = next();
        u128 m = static_cast<u128>(x) * static_cast<u128>(n);
        auto lo = static_cast<uint64_t>(m);
        if (lo < n) {
            uint64_t t = (0 - n) % n;
            while (lo < t) {
                x = next();
                m = static_cast<u128>(x) * static_cast<u128>(n);
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace cbl
