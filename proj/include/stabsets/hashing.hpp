#pragma once

#include <cstdint>

namespace stabsets {

// SplitMix64 finalizer. All seeded randomness in the library is a pure
// function of (seed, index) built from this mixer, so traces replay
// identically on every platform.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Uniform value in [0, bound) from a 64-bit hash (multiply-shift, bias below
/// bound / 2^64).
constexpr std::uint64_t bounded(std::uint64_t hash, std::uint64_t bound) noexcept
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(hash) * bound) >> 64);
}

} // namespace stabsets
