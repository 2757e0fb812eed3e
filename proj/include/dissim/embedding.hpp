#pragma once

#include <cmath>
#include <optional>

#include "dissim/distance.hpp"
#include "dissim/errors.hpp"
#include "dissim/geometry.hpp"
#include "dissim/pair_sampling.hpp"
#include "dissim/selection.hpp"
#include "dissim/types.hpp"

namespace dissim {

/// Dissimilarity projection of one object: entry k is the kernel distance to
/// prototype k.
EmbeddedVector project(const Streamline& x, const PrototypeSet& prototypes,
                       DistanceKernel kernel);
EmbeddedVector project(const Streamline& x, const std::vector<Streamline>& prototypes,
                       DistanceKernel kernel);

/// Row-wise projection of a whole dataset into an N x p matrix. Rows are
/// computed concurrently; row i equals project(dataset[i]) bit-exactly.
EmbeddedDataset project_all(const Dataset& dataset, const PrototypeSet& prototypes,
                            DistanceKernel kernel);
EmbeddedDataset project_all(const Dataset& dataset, const std::vector<Streamline>& prototypes,
                            DistanceKernel kernel);

/// Euclidean distance between two embedded vectors, unscaled. Accepts any
/// vector-shaped expression (matrix rows included).
template <typename DerivedU, typename DerivedV>
Scalar delta(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  if (u.size() != v.size()) throw LengthMismatch(static_cast<long>(u.size()), static_cast<long>(v.size()));
  Scalar acc = 0;
  for (Index k = 0; k < u.size(); ++k) {
    const Scalar d = u.coeff(k) - v.coeff(k);
    acc += d * d;
  }
  return std::sqrt(acc);
}

/// delta divided by sqrt(p). Convenience for comparing across embedding
/// sizes; not part of the plain projected-space distance.
template <typename DerivedU, typename DerivedV>
Scalar delta_normalized(const Eigen::MatrixBase<DerivedU>& u,
                        const Eigen::MatrixBase<DerivedV>& v) {
  return delta(u, v) / std::sqrt(static_cast<Scalar>(u.size()));
}

/// Empirical distortion over sampled pairs.
/// c is the smallest constant with d >= Delta >= d / c over pairs with d > 0,
/// i.e. the max of d / Delta; unset when some pair has d > 0 but Delta == 0.
/// violations counts pairs where d >= Delta fails; reported, not asserted,
/// since the unscaled Delta over p > 1 coordinates may exceed d.
struct DistortionReport {
  std::optional<Scalar> c;
  Index violations = 0;
  Index pairs_evaluated = 0;
};

DistortionReport empirical_distortion(const Dataset& dataset, const EmbeddedDataset& embedded,
                                      DistanceKernel kernel, const PairSamplingSpec& pair_sample);

}  // namespace dissim
