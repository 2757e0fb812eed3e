#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dissim/distance.hpp"
#include "dissim/geometry.hpp"
#include "dissim/types.hpp"

namespace dissim {

enum class SelectionPolicy { Random, Fft, Sff };

const char* to_string(SelectionPolicy policy);
std::optional<SelectionPolicy> policy_from_string(std::string_view name);

/// The ordered prototype set: p pairwise-distinct indices into the source
/// dataset plus copies of the corresponding streamlines.
struct PrototypeSet {
  std::vector<Index> indices;
  std::vector<Streamline> streamlines;
  SelectionPolicy policy = SelectionPolicy::Random;
  std::uint64_t seed = 0;

  Index size() const { return static_cast<Index>(indices.size()); }
};

struct SffParams {
  Scalar c = 3.0;
  Index p = 1;
};

/// Subset size m = ceil(c * p * ln p), clamped to [p, n]. Natural log, so the
/// coverage bound p * exp(-m/p) keeps its algebra. p == 1 would give m = 0;
/// it uses max(1, ceil(c)) instead, still clamped.
Index sff_subset_size(Scalar c, Index p, Index n);

/// Draws p indices uniformly at random without replacement, in draw order.
PrototypeSet select_random(const Dataset& dataset, Index p, std::uint64_t seed);

/// Farthest first traversal: the first prototype is drawn uniformly at random
/// (or forced via `start` for reproducible traces); each following one is the
/// unchosen element farthest from the chosen set, ties broken by smallest
/// dataset index. Maintains one running minimum distance per element, updated
/// with a single kernel evaluation per new prototype: O(p |S|) kernel calls.
PrototypeSet select_fft(const Dataset& dataset, Index p, DistanceKernel kernel,
                        std::uint64_t seed, std::optional<Index> start = std::nullopt);

/// Subset farthest first: samples m = sff_subset_size(c, p, |S|) indices
/// uniformly without replacement, then runs FFT restricted to that subset.
/// Returned indices refer to the full dataset. When m reaches |S| the
/// candidate set is the whole dataset and the result equals select_fft with
/// the same seed.
PrototypeSet select_sff(const Dataset& dataset, const SffParams& params, DistanceKernel kernel,
                        std::uint64_t seed);

/// Covering radius of the prototype set: max over the dataset of the distance
/// to the nearest prototype.
Scalar kcenter_cost(const Dataset& dataset, const PrototypeSet& prototypes,
                    DistanceKernel kernel);

}  // namespace dissim
