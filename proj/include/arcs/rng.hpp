#pragma once

#include <cstdint>
#include <random>

#include "arcs/normal.hpp"

namespace arcs {

// All randomness flows through std::mt19937_64, whose output sequence is
// fully specified by the C++ standard, so seeded runs replay bit-identically.
using Engine = std::mt19937_64;

// SplitMix64 output scramble (Steele, Lea & Flood's generator).
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Seed of the `stream`-th independent substream of `base_seed`: the
// (stream+1)-th output of a SplitMix64 sequence started at base_seed.
// O(1) in stream, so replications can be seeded out of order.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream) {
  return splitmix64_mix(base_seed + (stream + 1) * 0x9E3779B97F4A7C15ull);
}

// Uniform draw in the open interval (0,1): the top 53 bits of the engine
// output, offset by half an ulp so 0 and 1 are unreachable.
inline double uniform_open01(Engine& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

// Standard normal draw by the inverse-CDF method. The sampler is pinned to
// this algorithm (one engine output, one PPND16 evaluation per draw) so that
// seeded paths are reproducible; see README for the libm rounding caveat.
inline double standard_normal(Engine& rng) {
  return normal_quantile(uniform_open01(rng));
}

}  // namespace arcs
