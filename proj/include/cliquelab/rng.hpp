#pragma once

#include <cstdint>
#include <random>

namespace cliquelab {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent per-restart / per-trial
// seeds from one master seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix_seed(mix_seed(master) ^ (index * 0xd1b54a32d192ed03ULL));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix_seed(seed)); }

} // namespace cliquelab
