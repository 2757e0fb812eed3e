#include "dissim/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dissim/parallel.hpp"
#include "dissim/rng.hpp"

namespace dissim {

const char* to_string(SelectionPolicy policy) {
  switch (policy) {
    case SelectionPolicy::Random: return "random";
    case SelectionPolicy::Fft: return "fft";
    case SelectionPolicy::Sff: return "sff";
  }
  return "?";
}

std::optional<SelectionPolicy> policy_from_string(std::string_view name) {
  if (name == "random") return SelectionPolicy::Random;
  if (name == "fft") return SelectionPolicy::Fft;
  if (name == "sff") return SelectionPolicy::Sff;
  return std::nullopt;
}

namespace {

void check_p(Index p, Index n) {
  if (p < 1) throw Error("p must be >= 1");
  if (p > n) throw TooManyPrototypes(p, n);
}

PrototypeSet make_set(const Dataset& dataset, std::vector<Index> indices, SelectionPolicy policy,
                      std::uint64_t seed) {
  PrototypeSet set;
  set.streamlines.reserve(indices.size());
  for (Index i : indices) set.streamlines.push_back(dataset[i]);
  set.indices = std::move(indices);
  set.policy = policy;
  set.seed = seed;
  return set;
}

// Greedy farthest-first over an ascending candidate list; `start` is a
// position within `candidates`. Keeps one running minimum distance to the
// chosen set per candidate (one kernel evaluation per candidate per round);
// the argmax scan runs in index order with strict comparison, so ties fall
// to the smallest dataset index.
std::vector<Index> fft_over_candidates(const Dataset& dataset, const std::vector<Index>& candidates,
                                       Index p, DistanceKernel kernel, Index start) {
  const Index m = static_cast<Index>(candidates.size());
  std::vector<Index> chosen;
  chosen.reserve(static_cast<std::size_t>(p));

  constexpr Scalar kChosen = -1.0;
  std::vector<Scalar> min_dist(static_cast<std::size_t>(m),
                               std::numeric_limits<Scalar>::infinity());

  Index current = start;
  for (Index round = 0;; ++round) {
    chosen.push_back(candidates[static_cast<std::size_t>(current)]);
    if (round + 1 == p) break;

    min_dist[static_cast<std::size_t>(current)] = kChosen;
    const Streamline& latest = dataset[chosen.back()];
    parallel_for(m, [&](Index i) {
      Scalar& entry = min_dist[static_cast<std::size_t>(i)];
      if (entry == kChosen) return;
      const Scalar d = kernel_distance(kernel, dataset[candidates[static_cast<std::size_t>(i)]], latest);
      entry = std::min(entry, d);
    });

    Scalar best = -std::numeric_limits<Scalar>::infinity();
    Index best_pos = -1;
    for (Index i = 0; i < m; ++i) {
      const Scalar d = min_dist[static_cast<std::size_t>(i)];
      if (d != kChosen && d > best) {
        best = d;
        best_pos = i;
      }
    }
    current = best_pos;
  }
  return chosen;
}

std::vector<Index> identity_indices(Index n) {
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  return all;
}

}  // namespace

Index sff_subset_size(Scalar c, Index p, Index n) {
  if (c <= 0) throw Error("sff: c must be positive");
  check_p(p, n);
  Index raw;
  if (p == 1) {
    raw = std::max<Index>(1, static_cast<Index>(std::ceil(c)));
  } else {
    raw = static_cast<Index>(std::ceil(c * static_cast<Scalar>(p) * std::log(static_cast<Scalar>(p))));
  }
  return std::clamp(raw, p, n);
}

PrototypeSet select_random(const Dataset& dataset, Index p, std::uint64_t seed) {
  check_p(p, dataset.size());
  Rng rng(seed);
  return make_set(dataset, rng.sample_without_replacement(dataset.size(), p),
                  SelectionPolicy::Random, seed);
}

PrototypeSet select_fft(const Dataset& dataset, Index p, DistanceKernel kernel,
                        std::uint64_t seed, std::optional<Index> start) {
  const Index n = dataset.size();
  check_p(p, n);
  if (start && (*start < 0 || *start >= n)) throw Error("fft: start index out of range");
  Rng rng(seed);
  const Index first = start ? *start : static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  return make_set(dataset, fft_over_candidates(dataset, identity_indices(n), p, kernel, first),
                  SelectionPolicy::Fft, seed);
}

PrototypeSet select_sff(const Dataset& dataset, const SffParams& params, DistanceKernel kernel,
                        std::uint64_t seed) {
  const Index n = dataset.size();
  const Index m = sff_subset_size(params.c, params.p, n);
  Rng rng(seed);

  std::vector<Index> candidates;
  if (m >= n) {
    // Whole dataset: skip the draw so the generator stream, and therefore the
    // result, matches select_fft with the same seed.
    candidates = identity_indices(n);
  } else {
    candidates = rng.sample_without_replacement(n, m);
    std::sort(candidates.begin(), candidates.end());
  }

  const Index first = static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(candidates.size())));
  return make_set(dataset, fft_over_candidates(dataset, candidates, params.p, kernel, first),
                  SelectionPolicy::Sff, seed);
}

Scalar kcenter_cost(const Dataset& dataset, const PrototypeSet& prototypes,
                    DistanceKernel kernel) {
  if (prototypes.size() < 1) throw Error("kcenter_cost: empty prototype set");
  const Index n = dataset.size();
  std::vector<Scalar> nearest(static_cast<std::size_t>(n));
  parallel_for(n, [&](Index i) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (const Streamline& t : prototypes.streamlines)
      best = std::min(best, kernel_distance(kernel, dataset[i], t));
    nearest[static_cast<std::size_t>(i)] = best;
  });
  return *std::max_element(nearest.begin(), nearest.end());
}

}  // namespace dissim
