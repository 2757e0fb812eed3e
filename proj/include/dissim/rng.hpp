#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dissim/types.hpp"

namespace dissim {

/// Seeded pseudo-random generator used by every randomized operation in the
/// library. The engine is std::mt19937_64, whose output sequence is fully
/// specified by the C++ standard; the distribution transforms below are
/// hand-rolled because the std:: distribution classes are
/// implementation-defined and would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, n). n must be >= 1.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal deviate via the Box-Muller transform; pairs are
  /// generated together and the second value cached.
  double normal();

  /// Draws k distinct indices from [0, n) by partial Fisher-Yates shuffle,
  /// in draw order. Uniform over ordered k-samples without replacement.
  std::vector<Index> sample_without_replacement(Index n, Index k);

  /// Draws k distinct values from [0, universe) by Robert Floyd's sampling
  /// algorithm, returned sorted ascending. Does not materialize the universe,
  /// so it works for ranges far larger than memory.
  std::vector<std::uint64_t> sample_distinct_values(std::uint64_t universe, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace dissim
