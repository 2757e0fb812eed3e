#pragma once

// Shared helpers and independent reference implementations for the test
// suites. The reference code deliberately avoids Eigen and the library's own
// kernels so it can serve as an oracle.

#include <cmath>
#include <limits>
#include <vector>

#include "dissim/geometry.hpp"
#include "dissim/rng.hpp"
#include "dissim/types.hpp"

namespace testsupport {

using PointList = std::vector<std::vector<double>>;

/// Builds a D x n streamline from a list of points.
inline dissim::Streamline sl(const PointList& points) {
  const auto npts = static_cast<dissim::Index>(points.size());
  const auto dim = static_cast<dissim::Index>(points.front().size());
  dissim::Streamline s(dim, npts);
  for (dissim::Index j = 0; j < npts; ++j)
    for (dissim::Index k = 0; k < dim; ++k)
      s(k, j) = points[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  return s;
}

/// One-point streamlines from scalar values (1D point cloud).
inline dissim::Dataset points_1d(const std::vector<double>& values) {
  std::vector<dissim::Streamline> lines;
  lines.reserve(values.size());
  for (double v : values) lines.push_back(sl({{v}}));
  return dissim::make_dataset(std::move(lines));
}

/// Random polyline with coordinates in [-range, range].
inline dissim::Streamline random_streamline(dissim::Rng& rng, dissim::Index dim,
                                            dissim::Index max_points, double range = 10.0) {
  const auto npts = 1 + static_cast<dissim::Index>(
                            rng.uniform_below(static_cast<std::uint64_t>(max_points)));
  dissim::Streamline s(dim, npts);
  for (dissim::Index j = 0; j < npts; ++j)
    for (dissim::Index k = 0; k < dim; ++k) s(k, j) = (2.0 * rng.uniform_unit() - 1.0) * range;
  return s;
}

inline dissim::Dataset random_dataset(dissim::Rng& rng, dissim::Index n, dissim::Index dim,
                                      dissim::Index max_points, double range = 10.0) {
  std::vector<dissim::Streamline> lines;
  lines.reserve(static_cast<std::size_t>(n));
  for (dissim::Index i = 0; i < n; ++i)
    lines.push_back(random_streamline(rng, dim, max_points, range));
  return dissim::make_dataset(std::move(lines));
}

namespace reference {

inline double point_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    acc += d * d;
  }
  return std::sqrt(acc);
}

inline double mam_directed(const PointList& a, const PointList& b) {
  double acc = 0;
  for (const auto& pa : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pb : b) best = std::min(best, point_dist(pa, pb));
    acc += best;
  }
  return acc / static_cast<double>(a.size());
}

inline double mam(const PointList& a, const PointList& b) {
  return 0.5 * (mam_directed(a, b) + mam_directed(b, a));
}

inline PointList to_points(const dissim::Streamline& s) {
  PointList points(static_cast<std::size_t>(s.cols()));
  for (dissim::Index j = 0; j < s.cols(); ++j) {
    auto& p = points[static_cast<std::size_t>(j)];
    p.resize(static_cast<std::size_t>(s.rows()));
    for (dissim::Index k = 0; k < s.rows(); ++k) p[static_cast<std::size_t>(k)] = s(k, j);
  }
  return points;
}

/// Exact k-center optimum by exhaustive enumeration of all p-subsets.
/// Feasible for tiny instances only; the standard oracle for the FFT
/// 2-approximation guarantee.
inline double optimal_kcenter_cost(const std::vector<std::vector<double>>& dist, int p) {
  const int n = static_cast<int>(dist.size());
  std::vector<int> subset(static_cast<std::size_t>(p));
  double best = std::numeric_limits<double>::infinity();

  auto evaluate = [&] {
    double radius = 0;
    for (int x = 0; x < n; ++x) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int t : subset) nearest = std::min(nearest, dist[x][t]);
      radius = std::max(radius, nearest);
    }
    best = std::min(best, radius);
  };

  // Lexicographic enumeration of all p-subsets of {0..n-1}.
  for (int i = 0; i < p; ++i) subset[static_cast<std::size_t>(i)] = i;
  for (;;) {
    evaluate();
    int i = p - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

}  // namespace reference

}  // namespace testsupport
