#pragma once

#include <cstdint>
#include <random>

namespace sercor {

// SplitMix64 finalizer, used to decorrelate seeds derived from (master, stream).
constexpr inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Private RNG stream for one replication: seed_i = hash(master_seed, stream).
// Results are therefore independent of how replications are scheduled.
inline std::mt19937_64 replication_rng(std::uint64_t master_seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ splitmix64(~stream)));
}

// Stream index reserved for the one-off design draw of fixed-design runs.
constexpr std::uint64_t kDesignStream = ~0ull;

// Per-scenario master seeds for batch runs without an explicit seed entry.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(splitmix64(master_seed) + index);
}

}  // namespace sercor
