#pragma once

#include <cstdint>

namespace fgc {

// splitmix64: tiny, seedable, identical on every platform, which is all the
// reproducible sampling paths need
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); rejection keeps it exact
    uint64_t below(uint64_t n) {
        uint64_t lim = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t x;
        do {
            x = next();
        } while (x >= lim);
        return x % n;
    }

    // uniform in [lo, hi], inclusive on both ends
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo) + 1));
    }
};

} // namespace fgc
