#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dissim/types.hpp"

namespace dissim {

/// Which object pairs enter a pairwise statistic. AllPairs enumerates every
/// unordered pair; RandomPairs draws `count` distinct unordered pairs without
/// replacement (all pairs when count reaches the total), so exhausting the
/// pair set reproduces AllPairs exactly.
struct PairSamplingSpec {
  enum class Mode { AllPairs, RandomPairs };

  Mode mode = Mode::RandomPairs;
  Index count = 100000;     // RandomPairs only; must be >= 2
  std::uint64_t seed = 0;   // RandomPairs only

  static PairSamplingSpec all() { return {Mode::AllPairs, 0, 0}; }
  static PairSamplingSpec random(Index count, std::uint64_t seed) {
    return {Mode::RandomPairs, count, seed};
  }
};

/// Number of unordered pairs over n objects: n (n - 1) / 2.
std::uint64_t pair_count(Index n);

/// Materializes the sampled pairs as (i, j) with i < j, sorted
/// lexicographically. Deterministic for a fixed spec.
std::vector<std::pair<Index, Index>> sample_pairs(Index n, const PairSamplingSpec& spec);

namespace detail {

// Bijection between ranks [0, n(n-1)/2) and unordered pairs (i, j), i < j,
// in lexicographic order. Exposed for tests.
std::pair<Index, Index> pair_from_rank(Index n, std::uint64_t rank);

}  // namespace detail

}  // namespace dissim
