#include "dissim/pair_sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "dissim/errors.hpp"
#include "dissim/rng.hpp"

namespace dissim {

std::uint64_t pair_count(Index n) {
  if (n < 2) return 0;
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  return un * (un - 1) / 2;
}

namespace detail {

// Lexicographic rank of (i, j), i < j, is
//   base(i) + (j - i - 1),  base(i) = i (2n - i - 1) / 2.
// The inverse solves the quadratic for i with a floating guess, then fixes it
// up with exact integer comparisons.
std::pair<Index, Index> pair_from_rank(Index n, std::uint64_t rank) {
  const std::uint64_t total = pair_count(n);
  if (rank >= total) throw std::out_of_range("pair_from_rank: rank out of range");

  const std::uint64_t un = static_cast<std::uint64_t>(n);
  auto base = [un](std::uint64_t i) { return i * (2 * un - i - 1) / 2; };

  const double a = 2.0 * static_cast<double>(un) - 1.0;
  double guess = (a - std::sqrt(a * a - 8.0 * static_cast<double>(rank))) / 2.0;
  std::uint64_t i = guess <= 0.0 ? 0 : static_cast<std::uint64_t>(guess);
  if (i > un - 2) i = un - 2;
  while (i > 0 && base(i) > rank) --i;
  while (i + 1 <= un - 2 && base(i + 1) <= rank) ++i;

  const std::uint64_t j = i + 1 + (rank - base(i));
  return {static_cast<Index>(i), static_cast<Index>(j)};
}

}  // namespace detail

std::vector<std::pair<Index, Index>> sample_pairs(Index n, const PairSamplingSpec& spec) {
  const std::uint64_t total = pair_count(n);
  if (total == 0) throw Error("pair sampling requires at least two objects");

  auto enumerate_all = [&] {
    std::vector<std::pair<Index, Index>> pairs;
    pairs.reserve(static_cast<std::size_t>(total));
    for (Index i = 0; i + 1 < n; ++i)
      for (Index j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
  };

  if (spec.mode == PairSamplingSpec::Mode::AllPairs) return enumerate_all();

  if (spec.count < 2) throw Error("RandomPairs count must be >= 2");
  const std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(spec.count), total);
  if (k == total) return enumerate_all();

  Rng rng(spec.seed);
  const std::vector<std::uint64_t> ranks = rng.sample_distinct_values(total, k);
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(ranks.size());
  for (std::uint64_t r : ranks) pairs.push_back(detail::pair_from_rank(n, r));
  return pairs;
}

}  // namespace dissim
