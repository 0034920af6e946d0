#pragma once

#include <cstdint>

namespace bestworst {

// Independent substream seed for (seed, stream). Work is split into fixed
// streams (voter blocks, profile indices) rather than per-thread streams, so
// results do not depend on the number of threads.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bestworst
