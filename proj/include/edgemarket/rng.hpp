#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace edgemarket::rng {

/// splitmix64 finalizer; full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Purpose tags for independent substreams of one master seed.
enum class Stream : std::uint64_t {
    Population = 1,
    Allocation = 2,
};

/// Seed for the (purpose, index) substream of a master seed. Substreams are
/// independent of each other, so adding trials or grid cells never perturbs
/// the draws of existing cells.
constexpr std::uint64_t substream_seed(std::uint64_t master, Stream purpose, std::uint64_t index) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ static_cast<std::uint64_t>(purpose));
    h = mix64(h ^ index);
    return h;
}

/// Key identifying one (servers, trial) sweep cell.
constexpr std::uint64_t cell_key(std::uint64_t servers, std::uint64_t trial) {
    return (servers << 32) ^ trial;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

/// Unbiased integer in [0, n); n must be positive.
inline std::uint64_t below(std::mt19937_64& eng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = eng();
        if (r >= threshold) return r % n;
    }
}

/// Fisher-Yates shuffle driven by `below`, stable across standard libraries.
template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& eng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::swap(values[i - 1], values[below(eng, i)]);
    }
}

}  // namespace edgemarket::rng
