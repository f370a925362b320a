#pragma once

#include <cstdint>

namespace prunesched {

// SplitMix64 with the standard update/mix constants. The generator (and the
// modulo reduction below) is part of the instance-file reproducibility
// contract: identical seeds yield byte-identical instances on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [lo, hi], hi >= lo, by modulo reduction.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

// Derives a per-task seed from a base seed and an index, so batches of
// generated instances do not share stream prefixes.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 rng(seed ^ (salt + 1) * 0x9E3779B97F4A7C15ull);
  return rng.next();
}

}  // namespace prunesched
