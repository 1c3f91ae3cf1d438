#pragma once

// Deterministic random source shared by every randomized routine.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded integers are drawn by rejection on the raw 64-bit
// output (no std::uniform_int_distribution, whose algorithm is
// implementation-defined), so streams are bit-identical across toolchains.

#include <cstdint>
#include <random>

namespace tcc {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Independent stream for worker or trial `index` derived from a base seed.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
}

}  // namespace tcc
