#include "dissim/datagen.hpp"

#include <cmath>

#include "dissim/rng.hpp"

namespace dissim {

Dataset generate_gaussian(const GaussianCloudSpec& spec) {
  if (spec.n < 1) throw Error("generate_gaussian: n must be >= 1");
  Rng rng(spec.seed);
  std::vector<Streamline> points;
  points.reserve(static_cast<std::size_t>(spec.n));
  for (Index i = 0; i < spec.n; ++i) {
    Streamline point(2, 1);
    point(0, 0) = rng.normal();
    point(1, 0) = rng.normal();
    points.push_back(std::move(point));
  }
  return make_dataset(std::move(points));
}

namespace {

Eigen::Vector3d unit_gaussian_direction(Rng& rng) {
  for (;;) {
    Eigen::Vector3d g(rng.normal(), rng.normal(), rng.normal());
    const double norm = g.norm();
    if (norm > 1e-12) return g / norm;
  }
}

}  // namespace

Dataset generate_polylines(const PolylineCloudSpec& spec) {
  if (spec.n < 1) throw Error("generate_polylines: n must be >= 1");
  if (spec.min_points < 2) throw Error("generate_polylines: min_points must be >= 2");
  if (spec.max_points < spec.min_points)
    throw Error("generate_polylines: max_points must be >= min_points");
  if (!(spec.extent > 0)) throw Error("generate_polylines: extent must be positive");
  if (!(spec.step_length > 0)) throw Error("generate_polylines: step_length must be positive");
  if (spec.momentum < 0 || spec.momentum >= 1)
    throw Error("generate_polylines: momentum must lie in [0, 1)");

  Rng rng(spec.seed);
  std::vector<Streamline> lines;
  lines.reserve(static_cast<std::size_t>(spec.n));
  const std::uint64_t span = static_cast<std::uint64_t>(spec.max_points - spec.min_points) + 1;

  for (Index s = 0; s < spec.n; ++s) {
    const Index npts = spec.min_points + static_cast<Index>(rng.uniform_below(span));
    Streamline line(3, npts);
    Eigen::Vector3d position(rng.uniform_unit() * spec.extent, rng.uniform_unit() * spec.extent,
                             rng.uniform_unit() * spec.extent);
    Eigen::Vector3d direction = unit_gaussian_direction(rng);
    line.col(0) = position;
    for (Index k = 1; k < npts; ++k) {
      const Eigen::Vector3d noise(rng.normal(), rng.normal(), rng.normal());
      Eigen::Vector3d blended = spec.momentum * direction + (1.0 - spec.momentum) * noise;
      const double norm = blended.norm();
      if (norm > 1e-12) direction = blended / norm;
      position += spec.step_length * direction;
      line.col(k) = position;
    }
    lines.push_back(std::move(line));
  }
  return make_dataset(std::move(lines));
}

}  // namespace dissim
