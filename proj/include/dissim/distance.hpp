#pragma once

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "dissim/errors.hpp"
#include "dissim/geometry.hpp"
#include "dissim/types.hpp"

namespace dissim {

/// Named parameter-free distance between streamlines. Euclidean is defined on
/// length-1 streamlines only; MAM (symmetric minimum average distance) works
/// on any pair. Neither is assumed metric by the rest of the library.
enum class DistanceKernel { Euclidean, Mam };

const char* to_string(DistanceKernel kernel);
std::optional<DistanceKernel> kernel_from_string(std::string_view name);

namespace detail {

// Squared point distance with unrolled 2D/3D paths. Every distance in the
// library funnels through this one expression so that batched and direct
// evaluations agree bit-for-bit.
template <typename DerivedA, typename DerivedB>
inline Scalar point_sqdist(const Eigen::MatrixBase<DerivedA>& a,
                           const Eigen::MatrixBase<DerivedB>& b) {
  switch (a.rows()) {
    case 2: {
      const Scalar dx = a.coeff(0) - b.coeff(0);
      const Scalar dy = a.coeff(1) - b.coeff(1);
      return dx * dx + dy * dy;
    }
    case 3: {
      const Scalar dx = a.coeff(0) - b.coeff(0);
      const Scalar dy = a.coeff(1) - b.coeff(1);
      const Scalar dz = a.coeff(2) - b.coeff(2);
      return (dx * dx + dy * dy) + dz * dz;
    }
    default: {
      Scalar acc = 0;
      for (Index k = 0; k < a.rows(); ++k) {
        const Scalar d = a.coeff(k) - b.coeff(k);
        acc += d * d;
      }
      return acc;
    }
  }
}

}  // namespace detail

/// Euclidean distance between two points (D x 1 vectors or matrix columns).
template <typename DerivedA, typename DerivedB>
Scalar euclidean(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != 1 || b.cols() != 1)
    throw DimensionMismatch("euclidean: points must be vectors of equal dimension");
  return std::sqrt(detail::point_sqdist(a, b));
}

/// Directed minimum average distance: the mean, over points of a, of the
/// distance to the nearest point of b. Not symmetric in general. Exhaustive
/// nearest-point search over all |a|*|b| point pairs, no pruning.
template <typename DerivedA, typename DerivedB>
Scalar mam_directed(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("mam: streamlines must share one dimension");
  if (a.cols() < 1 || b.cols() < 1)
    throw DimensionMismatch("mam: streamlines must have at least one point");
  Scalar acc = 0;
  for (Index i = 0; i < a.cols(); ++i) {
    Scalar best = detail::point_sqdist(a.col(i), b.col(0));
    for (Index j = 1; j < b.cols(); ++j)
      best = std::min(best, detail::point_sqdist(a.col(i), b.col(j)));
    acc += std::sqrt(best);
  }
  return acc / static_cast<Scalar>(a.cols());
}

/// Symmetric minimum average distance: the mean of the two directed values.
/// Reduces to the point Euclidean distance on length-1 streamlines.
template <typename DerivedA, typename DerivedB>
Scalar mam(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return 0.5 * (mam_directed(a, b) + mam_directed(b, a));
}

/// Applies the named kernel to one pair of streamlines.
Scalar kernel_distance(DistanceKernel kernel, const Streamline& a, const Streamline& b);

/// Entry (i, j) is kernel(rows[i], cols[j]). Rows are evaluated concurrently;
/// each entry is one fixed expression, so the result is identical for any
/// worker count. With rows == cols the matrix is symmetric with zero diagonal.
Matrix distance_matrix(const std::vector<Streamline>& rows, const std::vector<Streamline>& cols,
                       DistanceKernel kernel);

}  // namespace dissim
