#include "dissim/embedding.hpp"

#include "dissim/parallel.hpp"

namespace dissim {

EmbeddedVector project(const Streamline& x, const std::vector<Streamline>& prototypes,
                       DistanceKernel kernel) {
  const Index p = static_cast<Index>(prototypes.size());
  EmbeddedVector values(p);
  for (Index k = 0; k < p; ++k)
    values(k) = kernel_distance(kernel, x, prototypes[static_cast<std::size_t>(k)]);
  return values;
}

EmbeddedVector project(const Streamline& x, const PrototypeSet& prototypes,
                       DistanceKernel kernel) {
  return project(x, prototypes.streamlines, kernel);
}

EmbeddedDataset project_all(const Dataset& dataset, const std::vector<Streamline>& prototypes,
                            DistanceKernel kernel) {
  const Index n = dataset.size();
  const Index p = static_cast<Index>(prototypes.size());
  EmbeddedDataset embedded(n, p);
  parallel_for(n, [&](Index i) {
    for (Index k = 0; k < p; ++k)
      embedded(i, k) = kernel_distance(kernel, dataset[i], prototypes[static_cast<std::size_t>(k)]);
  });
  return embedded;
}

EmbeddedDataset project_all(const Dataset& dataset, const PrototypeSet& prototypes,
                            DistanceKernel kernel) {
  return project_all(dataset, prototypes.streamlines, kernel);
}

DistortionReport empirical_distortion(const Dataset& dataset, const EmbeddedDataset& embedded,
                                      DistanceKernel kernel,
                                      const PairSamplingSpec& pair_sample) {
  if (embedded.rows() != dataset.size())
    throw DimensionMismatch("empirical_distortion: embedded rows must match dataset size");

  const auto pairs = sample_pairs(dataset.size(), pair_sample);
  const Index np = static_cast<Index>(pairs.size());
  std::vector<Scalar> original(pairs.size());
  parallel_for(np, [&](Index k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    original[static_cast<std::size_t>(k)] = kernel_distance(kernel, dataset[i], dataset[j]);
  });

  DistortionReport report;
  report.pairs_evaluated = np;
  Scalar worst_ratio = 0;
  bool ratio_defined = true;
  bool any_positive = false;
  for (Index k = 0; k < np; ++k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    const Scalar d = original[static_cast<std::size_t>(k)];
    const Scalar dd = delta(embedded.row(i), embedded.row(j));
    if (dd > d) ++report.violations;
    if (d <= 0) continue;  // zero-distance pairs carry no ratio information
    any_positive = true;
    if (dd == 0) {
      ratio_defined = false;
      continue;
    }
    worst_ratio = std::max(worst_ratio, d / dd);
  }
  if (any_positive && ratio_defined) report.c = worst_ratio;
  return report;
}

}  // namespace dissim
