#pragma once

#include <cstdint>

#include "dissim/geometry.hpp"
#include "dissim/types.hpp"

namespace dissim {

/// n single points drawn i.i.d. from the standard normal in 2D
/// (zero mean, identity covariance).
struct GaussianCloudSpec {
  Index n = 50;
  std::uint64_t seed = 0;
};

/// n smooth 3D polylines built by a momentum random walk: starts uniform in
/// [0, extent]^3 (mm), each step blends the previous direction with fresh
/// Gaussian noise and advances a fixed step length. Mimics the smoothness
/// regime of tractography streamlines.
struct PolylineCloudSpec {
  Index n = 1000;
  Index min_points = 20;
  Index max_points = 100;
  Scalar extent = 100.0;     // mm, must be positive
  Scalar step_length = 2.0;  // mm
  Scalar momentum = 0.9;     // in [0, 1): weight of the previous direction
  std::uint64_t seed = 0;
};

/// Deterministic per seed; the result always passes validate().
Dataset generate_gaussian(const GaussianCloudSpec& spec);

/// Deterministic per seed; the result always passes validate().
Dataset generate_polylines(const PolylineCloudSpec& spec);

}  // namespace dissim
