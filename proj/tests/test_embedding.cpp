#include <doctest.h>

#include <cmath>

#include "dissim/embedding.hpp"
#include "test_support.hpp"

using namespace dissim;
using testsupport::points_1d;
using testsupport::sl;

namespace {

PrototypeSet protos_from(const Dataset& ds, std::vector<Index> indices) {
  PrototypeSet set;
  for (Index i : indices) set.streamlines.push_back(ds[i]);
  set.indices = std::move(indices);
  return set;
}

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("project computes one distance per prototype") {
  const Dataset ds = make_dataset({sl({{0.0, 0.0}}), sl({{1.0, 0.0}}), sl({{0.0, 2.0}})});
  const PrototypeSet set = protos_from(ds, {1, 2});
  const EmbeddedVector v = project(ds[0], set, DistanceKernel::Euclidean);
  REQUIRE(v.size() == 2);
  CHECK(v(0) == 1.0);
  CHECK(v(1) == 2.0);
}

TEST_CASE("projecting a prototype zeroes its own coordinate") {
  const Dataset ds = make_dataset({sl({{0.5, -0.5}}), sl({{2.0, 7.0}})});
  const PrototypeSet set = protos_from(ds, {0, 1});
  CHECK(project(ds[1], set, DistanceKernel::Euclidean)(1) == 0.0);
}

TEST_CASE("project with the mam kernel matches the worked distance example") {
  const Dataset ds = make_dataset({sl({{0.0, 0.0}, {1.0, 0.0}}), sl({{0.0, 1.0}})});
  const PrototypeSet set = protos_from(ds, {1});
  const EmbeddedVector v = project(ds[0], set, DistanceKernel::Mam);
  REQUIRE(v.size() == 1);
  CHECK(v(0) == doctest::Approx(1.1035533905932737).epsilon(1e-12));
}

TEST_CASE("project_all rows equal project, bit-exactly") {
  Rng rng(71);
  const Dataset ds = testsupport::random_dataset(rng, 15, 3, 8);
  const PrototypeSet set = protos_from(ds, {2, 5, 11});
  const EmbeddedDataset embedded = project_all(ds, set, DistanceKernel::Mam);
  REQUIRE(embedded.rows() == ds.size());
  REQUIRE(embedded.cols() == 3);
  for (Index i = 0; i < ds.size(); ++i) {
    const EmbeddedVector row = project(ds[i], set, DistanceKernel::Mam);
    for (Index k = 0; k < 3; ++k) CHECK(embedded(i, k) == row(k));
  }
}

TEST_CASE("projecting the dataset onto itself zeroes the diagonal") {
  const Dataset ds = points_1d({0, 4, 9});
  const PrototypeSet set = protos_from(ds, {0, 1, 2});
  const EmbeddedDataset embedded = project_all(ds, set, DistanceKernel::Euclidean);
  for (Index i = 0; i < 3; ++i) CHECK(embedded(i, i) == 0.0);
}

TEST_CASE("two-point 1D projection example") {
  const Dataset ds = points_1d({0, 4});
  const PrototypeSet set = protos_from(ds, {0});
  const EmbeddedDataset embedded = project_all(ds, set, DistanceKernel::Euclidean);
  CHECK(embedded(0, 0) == 0.0);
  CHECK(embedded(1, 0) == 4.0);
}

TEST_CASE("delta basics") {
  Vector u(2), v(2);
  u << 1, 2;
  v << 4, 6;
  CHECK(delta(u, u) == 0.0);
  CHECK(delta(u, v) == 5.0);
  Vector w(3);
  w << 1, 2, 3;
  CHECK_THROWS_AS(delta(u, w), LengthMismatch);
  CHECK(delta_normalized(u, v) == doctest::Approx(5.0 / std::sqrt(2.0)).epsilon(1e-15));
}

// One prototype beyond collinear points reproduces the original distance:
// phi(x) = |x - t| = t - x for x <= t, so |phi(x) - phi(x')| = |x - x'|.
TEST_CASE("collinear single-prototype embedding reproduces d exactly") {
  const Dataset ds = points_1d({0, 1, 2, 3, 5, 8, 10});
  const PrototypeSet beyond = protos_from(points_1d({20}), {0});
  const EmbeddedDataset embedded = project_all(ds, beyond, DistanceKernel::Euclidean);
  for (Index i = 0; i < ds.size(); ++i)
    for (Index j = 0; j < ds.size(); ++j) {
      const Scalar d = kernel_distance(DistanceKernel::Euclidean, ds[i], ds[j]);
      CHECK(delta(embedded.row(i), embedded.row(j)) == d);
    }
}

TEST_CASE("delta satisfies the metric axioms on random vectors") {
  Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const Index p = 1 + static_cast<Index>(rng.uniform_below(6));
    Vector u(p), v(p), w(p);
    for (Index k = 0; k < p; ++k) {
      u(k) = rng.uniform_unit() * 10;
      v(k) = rng.uniform_unit() * 10;
      w(k) = rng.uniform_unit() * 10;
    }
    CHECK(delta(u, v) == delta(v, u));
    CHECK(delta(u, u) == 0.0);
    CHECK(delta(u, v) >= 0.0);
    CHECK(delta(u, w) <= delta(u, v) + delta(v, w) + 1e-12);
  }
}

// |phi(x)[k] - phi(x')[k]| <= d(x, x') for a metric kernel, hence
// Delta <= sqrt(p) d.
TEST_CASE("coordinate-wise Lipschitz bound under the euclidean kernel") {
  Rng rng(91);
  const Dataset ds = testsupport::random_dataset(rng, 30, 2, 1);
  const PrototypeSet set = protos_from(ds, {0, 7, 13, 21});
  const EmbeddedDataset embedded = project_all(ds, set, DistanceKernel::Euclidean);
  for (Index i = 0; i < ds.size(); ++i)
    for (Index j = i + 1; j < ds.size(); ++j) {
      const Scalar d = kernel_distance(DistanceKernel::Euclidean, ds[i], ds[j]);
      for (Index k = 0; k < set.size(); ++k)
        CHECK(std::abs(embedded(i, k) - embedded(j, k)) <= d + 1e-12);
      CHECK(delta(embedded.row(i), embedded.row(j)) <=
            std::sqrt(static_cast<Scalar>(set.size())) * d + 1e-12);
    }
}

TEST_CASE("empirical distortion of the exact collinear embedding is 1") {
  const Dataset ds = points_1d({0, 1, 2, 3, 5, 8, 10});
  const PrototypeSet beyond = protos_from(points_1d({20}), {0});
  const EmbeddedDataset embedded = project_all(ds, beyond, DistanceKernel::Euclidean);
  const DistortionReport report =
      empirical_distortion(ds, embedded, DistanceKernel::Euclidean, PairSamplingSpec::all());
  REQUIRE(report.c.has_value());
  CHECK(*report.c == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(report.violations == 0);
  CHECK(report.pairs_evaluated == 21);
}

TEST_CASE("duplicate objects are excluded from the distortion ratio") {
  const Dataset ds = points_1d({0, 0, 4});  // one zero-distance pair
  const PrototypeSet beyond = protos_from(points_1d({10}), {0});
  const EmbeddedDataset embedded = project_all(ds, beyond, DistanceKernel::Euclidean);
  const DistortionReport report =
      empirical_distortion(ds, embedded, DistanceKernel::Euclidean, PairSamplingSpec::all());
  REQUIRE(report.c.has_value());
  CHECK(*report.c == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(report.violations == 0);
}

TEST_CASE("distortion is undefined when distinct objects collapse in the embedding") {
  // phi(-1) = phi(1) = 1 against the single prototype at 0, yet d = 2.
  const Dataset ds = points_1d({-1, 1, 0});
  const PrototypeSet origin = protos_from(points_1d({0}), {0});
  const EmbeddedDataset embedded = project_all(ds, origin, DistanceKernel::Euclidean);
  const DistortionReport report =
      empirical_distortion(ds, embedded, DistanceKernel::Euclidean, PairSamplingSpec::all());
  CHECK_FALSE(report.c.has_value());
}

// Triangle inequality makes a single metric coordinate contractive, so the
// left inequality d >= Delta can never fail with one prototype. Integer
// coordinates keep the arithmetic exact.
TEST_CASE("single prototype, metric kernel: zero violations, brute force") {
  Rng rng(111);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> values;
    for (int i = 0; i < 12; ++i)
      values.push_back(static_cast<double>(rng.uniform_below(2000)) - 1000.0);
    const Dataset ds = points_1d(values);
    const PrototypeSet proto = protos_from(ds, {static_cast<Index>(rng.uniform_below(12))});
    const EmbeddedDataset embedded = project_all(ds, proto, DistanceKernel::Euclidean);
    const DistortionReport report =
        empirical_distortion(ds, embedded, DistanceKernel::Euclidean, PairSamplingSpec::all());
    CHECK(report.violations == 0);
  }
}

}  // TEST_SUITE
