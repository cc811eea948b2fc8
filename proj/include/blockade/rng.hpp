#pragma once

#include <cstdint>

namespace blockade {

// Counter-based generator: output i of stream `seed` is splitmix64(seed, i).
// Byte-identical across platforms, trivially seekable, no shared state.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0)
        : seed_(seed ^ (stream * 0x9e3779b97f4a7c15ULL)), ctr_(0) {}

    uint64_t next() {
        uint64_t z = seed_ + (++ctr_) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (true) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0,1) with 53 bits.
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t seed_;
    uint64_t ctr_;
};

}  // namespace blockade
