#pragma once

#include <cstdint>
#include <random>

namespace mchyper {

// splitmix64 step; used to derive independent stream seeds from (seed, tags).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    std::uint64_t x = splitmix64(seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    x = splitmix64(x ^ a);
    x = splitmix64(x ^ b);
    return splitmix64(x ^ c);
}

// Unbiased draw from [0, bound). Hand-rolled rejection sampler so that results
// do not depend on the standard library's distribution implementation.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline int bounded_int(std::mt19937_64& rng, int bound) {
    return static_cast<int>(bounded(rng, static_cast<std::uint64_t>(bound)));
}

} // namespace mchyper
