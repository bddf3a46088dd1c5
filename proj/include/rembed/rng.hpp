#ifndef REMBED_RNG_HPP
#define REMBED_RNG_HPP

#include <cstdint>
#include <random>

namespace rembed {

// One seeded stream per worker; the stream is the only stateful object in the
// library.  mt19937_64's output sequence is fixed by the standard, and
// uniform_below uses plain rejection, so results are reproducible across
// compilers and standard libraries.
using RandomStream = std::mt19937_64;

// Mixing function used everywhere a derived seed is needed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline RandomStream make_stream(std::uint64_t seed) {
    return RandomStream(splitmix64(seed));
}

// Shard s of a run with master seed `seed` draws from
// mt19937_64(splitmix64(seed + (s + 1) * 0x9e3779b97f4a7c15)), so a result
// merged in shard order does not depend on how shards are assigned to
// workers.
inline RandomStream make_shard_stream(std::uint64_t seed, std::uint64_t shard) {
    return RandomStream(splitmix64(seed + (shard + 1) * 0x9e3779b97f4a7c15ULL));
}

// Uniform draw from {0, ..., n-1} by rejection.
inline std::uint64_t uniform_below(RandomStream& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

} // namespace rembed

#endif
