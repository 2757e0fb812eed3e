#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dissim/distance.hpp"
#include "dissim/embedding.hpp"
#include "dissim/geometry.hpp"
#include "dissim/pair_sampling.hpp"
#include "dissim/selection.hpp"
#include "dissim/types.hpp"

namespace dissim {

/// Sample Pearson correlation coefficient. Requires equal lengths >= 2 and
/// nonzero variance in both sequences; a degenerate sample raises
/// ZeroVariance rather than silently mapping to 0.
Scalar pearson(std::span<const Scalar> xs, std::span<const Scalar> ys);

/// Correlation between original kernel distances and embedded-space distances
/// over the sampled pairs: the embedding-quality measure.
Scalar distance_correlation(const Dataset& dataset, const EmbeddedDataset& embedded,
                            DistanceKernel kernel, const PairSamplingSpec& pairs);

/// Per-(policy, p) correlation statistics over repetitions.
/// wall_times_ms[r] is the wall-clock time of repetition r (selection,
/// projection and correlation; original pairwise distances are shared across
/// repetitions and excluded).
struct ExperimentReport {
  SelectionPolicy policy = SelectionPolicy::Random;
  Index p = 0;
  int repetitions = 0;
  std::vector<Scalar> correlations;
  Scalar mean = 0;
  Scalar std_dev = 0;  // sample estimate, (n - 1) denominator; 0 when repetitions == 1
  std::vector<Scalar> wall_times_ms;
};

/// Runs `repetitions` independent selections per p value (repetition r uses
/// seed base_seed + r), projects the dataset and computes the distance
/// correlation. Fully reproducible from base_seed; the pair sample is fixed
/// by `pairs` and shared by every repetition.
std::vector<ExperimentReport> run_experiment(const Dataset& dataset, SelectionPolicy policy,
                                             std::span<const Index> p_values, int repetitions,
                                             DistanceKernel kernel, const PairSamplingSpec& pairs,
                                             std::uint64_t base_seed, Scalar sff_c = 3.0);

}  // namespace dissim
