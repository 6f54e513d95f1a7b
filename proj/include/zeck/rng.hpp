#pragma once

#include <cstdint>

namespace zeck {

// Deterministic 64-bit generator (splitmix64). The seed-to-sequence contract
// below is relied on for reproducibility across runs, platforms and thread
// counts, so it is fixed:
//
//   state <- state + 0x9E3779B97F4A7C15            (per call)
//   z <- state
//   z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
//   next() = z ^ (z >> 31)
//
//   next_below(m) = next() % m        (modulo; bias is < 2^-57 for m <= 128)
//   next_unit()   = (next() >> 11) * 2^-53, uniform in [0, 1)
//
// The seed is the initial state, so equal seeds give equal sequences.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace zeck
