#include "dissim/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <algorithm>

namespace dissim {

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be >= 1");
  // Rejection below 2^64 mod n keeps the accepted range an exact multiple
  // of n, so the result is unbiased.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller on (0, 1] x [0, 1): fixed consumption of two uniforms per pair.
  const double u1 = 1.0 - uniform_unit();
  const double u2 = uniform_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

std::vector<Index> Rng::sample_without_replacement(Index n, Index k) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_without_replacement: k out of range");
  std::vector<Index> indices(static_cast<std::size_t>(n));
  std::iota(indices.begin(), indices.end(), Index{0});
  for (Index i = 0; i < k; ++i) {
    const Index j = i + static_cast<Index>(uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
  }
  indices.resize(static_cast<std::size_t>(k));
  return indices;
}

std::vector<std::uint64_t> Rng::sample_distinct_values(std::uint64_t universe, std::uint64_t k) {
  if (k > universe) throw std::invalid_argument("sample_distinct_values: k exceeds universe");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(k) * 2);
  std::vector<std::uint64_t> values;
  values.reserve(static_cast<std::size_t>(k));
  // Robert Floyd's algorithm: k iterations, each inserting exactly one new value.
  for (std::uint64_t v = universe - k; v < universe; ++v) {
    const std::uint64_t candidate = uniform_below(v + 1);
    const std::uint64_t chosen = seen.count(candidate) ? v : candidate;
    seen.insert(chosen);
    values.push_back(chosen);
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace dissim
