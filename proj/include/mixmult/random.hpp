#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mixmult {

/// Reproducible source of random scalars: std::mt19937_64 (fully specified by
/// the C++ standard) with explicit rejection sampling, so a seed determines
/// every draw on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit) return x % bound;
    }
  }

  /// Uniform in [1, bound).
  std::uint64_t nonzero_below(std::uint64_t bound) { return 1 + below(bound - 1); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return mix_seed(seed, h);
}

/// Knobs shared by every randomized operation.
struct GenericityConfig {
  std::uint64_t seed = 0;
  std::uint32_t prime = 32003;
  int max_retries = 16;
};

}  // namespace mixmult
