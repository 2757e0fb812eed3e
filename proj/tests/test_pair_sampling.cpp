#include <doctest.h>

#include <set>

#include "dissim/errors.hpp"
#include "dissim/pair_sampling.hpp"

using namespace dissim;

TEST_SUITE("pair_sampling") {

TEST_CASE("pair_count") {
  CHECK(pair_count(0) == 0);
  CHECK(pair_count(1) == 0);
  CHECK(pair_count(2) == 1);
  CHECK(pair_count(50) == 1225);
  CHECK(pair_count(300000) == 44999850000ull);
}

TEST_CASE("rank-to-pair bijection matches lexicographic enumeration") {
  for (Index n : {2, 3, 5, 17, 40}) {
    std::uint64_t rank = 0;
    for (Index i = 0; i + 1 < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        const auto [pi, pj] = detail::pair_from_rank(n, rank);
        CHECK(pi == i);
        CHECK(pj == j);
        ++rank;
      }
    CHECK(rank == pair_count(n));
    CHECK_THROWS(detail::pair_from_rank(n, rank));
  }
}

TEST_CASE("rank-to-pair handles large universes") {
  const Index n = 300000;
  const std::uint64_t total = pair_count(n);
  const auto first = detail::pair_from_rank(n, 0);
  CHECK(first.first == 0);
  CHECK(first.second == 1);
  const auto last = detail::pair_from_rank(n, total - 1);
  CHECK(last.first == n - 2);
  CHECK(last.second == n - 1);
}

TEST_CASE("all-pairs enumeration") {
  const auto pairs = sample_pairs(5, PairSamplingSpec::all());
  REQUIRE(pairs.size() == 10);
  CHECK(pairs.front() == std::pair<Index, Index>{0, 1});
  CHECK(pairs.back() == std::pair<Index, Index>{3, 4});
}

TEST_CASE("random pairs are distinct, ordered and deterministic") {
  const auto spec = PairSamplingSpec::random(200, 7);
  const auto pairs = sample_pairs(100, spec);
  REQUIRE(pairs.size() == 200);
  std::set<std::pair<Index, Index>> unique(pairs.begin(), pairs.end());
  CHECK(unique.size() == pairs.size());
  for (const auto& [i, j] : pairs) {
    CHECK(i >= 0);
    CHECK(i < j);
    CHECK(j < 100);
  }
  CHECK(sample_pairs(100, spec) == pairs);
}

TEST_CASE("requesting at least the whole pair set reproduces all pairs") {
  const auto all = sample_pairs(12, PairSamplingSpec::all());
  CHECK(sample_pairs(12, PairSamplingSpec::random(66, 3)) == all);
  CHECK(sample_pairs(12, PairSamplingSpec::random(1000, 3)) == all);
}

TEST_CASE("degenerate requests are rejected") {
  CHECK_THROWS_AS(sample_pairs(1, PairSamplingSpec::all()), Error);
  CHECK_THROWS_AS(sample_pairs(10, PairSamplingSpec::random(1, 0)), Error);
}

}  // TEST_SUITE
