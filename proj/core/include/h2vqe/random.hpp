#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace h2vqe {

/// 64-bit engine used by every stochastic path. std::mt19937_64 output is
/// fixed by the standard, so seeded runs reproduce across toolchains as long
/// as we avoid the implementation-defined std distributions.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a master seed, a label and an
/// index, e.g. derive_seed(seed, "spsa", k).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index = 0);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

/// Rademacher draw: -1 or +1 with equal probability.
int rademacher(Rng& rng);

}  // namespace h2vqe
