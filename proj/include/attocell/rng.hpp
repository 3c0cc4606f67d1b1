#pragma once

#include <cstdint>
#include <random>

namespace attocell {

// 64-bit splitmix scramble, used to spread one master seed into
// decorrelated substreams keyed by index.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x6A09E667F3BCC909ULL));
}

// Top 53 bits of the generator output mapped to [0, 1). Keeps placement
// reproducible across standard libraries, unlike the distribution classes.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace attocell
