#pragma once

#include <cstdint>
#include <random>

namespace covert {

/// Random stream used by every sampling routine. Each Monte-Carlo trial owns one.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for trial `index` under `root_seed`:
///   sub_seed = splitmix64(root_seed ^ splitmix64(index + 1))
/// A pure function of (root_seed, index), so trials can run in any order.
constexpr std::uint64_t sub_seed(std::uint64_t root_seed, std::uint64_t index) noexcept {
    return splitmix64(root_seed ^ splitmix64(index + 1));
}

inline Rng make_rng(std::uint64_t root_seed, std::uint64_t index) {
    return Rng{sub_seed(root_seed, index)};
}

}  // namespace covert
