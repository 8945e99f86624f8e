#pragma once

#include <cstdint>
#include <random>

namespace ghkit {

/// Random stream `index` of run `seed`. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; the seed is mixed with SplitMix64
/// so neighbouring indices give unrelated streams. Trial i of any randomized
/// suite draws from rng_stream(seed, i) and is reproducible in isolation.
std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits. Used instead of
/// std::uniform_real_distribution, whose output is implementation-defined.
double uniform01(std::mt19937_64& g);

/// Uniform integer in [lo, hi] by rejection sampling.
std::int64_t uniform_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi);

}  // namespace ghkit
