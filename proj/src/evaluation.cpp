#include "dissim/evaluation.hpp"

#include <chrono>
#include <cmath>

#include "dissim/parallel.hpp"

namespace dissim {

Scalar pearson(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  if (xs.size() != ys.size())
    throw LengthMismatch(static_cast<long>(xs.size()), static_cast<long>(ys.size()));
  const std::size_t n = xs.size();
  if (n < 2) throw ZeroVariance("pearson requires at least two samples");

  Scalar mean_x = 0, mean_y = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mean_x += xs[k];
    mean_y += ys[k];
  }
  mean_x /= static_cast<Scalar>(n);
  mean_y /= static_cast<Scalar>(n);

  Scalar sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar dx = xs[k] - mean_x;
    const Scalar dy = ys[k] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) throw ZeroVariance();
  return sxy / std::sqrt(sxx * syy);
}

namespace {

// Embedded-space distances over a fixed pair list, evaluated concurrently in
// canonical pair order.
std::vector<Scalar> delta_over_pairs(const EmbeddedDataset& embedded,
                                     const std::vector<std::pair<Index, Index>>& pairs) {
  std::vector<Scalar> values(pairs.size());
  parallel_for(static_cast<Index>(pairs.size()), [&](Index k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    values[static_cast<std::size_t>(k)] = delta(embedded.row(i), embedded.row(j));
  });
  return values;
}

std::vector<Scalar> kernel_over_pairs(const Dataset& dataset, DistanceKernel kernel,
                                      const std::vector<std::pair<Index, Index>>& pairs) {
  std::vector<Scalar> values(pairs.size());
  parallel_for(static_cast<Index>(pairs.size()), [&](Index k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    values[static_cast<std::size_t>(k)] = kernel_distance(kernel, dataset[i], dataset[j]);
  });
  return values;
}

PrototypeSet select_with_policy(const Dataset& dataset, SelectionPolicy policy, Index p,
                                DistanceKernel kernel, std::uint64_t seed, Scalar sff_c) {
  switch (policy) {
    case SelectionPolicy::Random: return select_random(dataset, p, seed);
    case SelectionPolicy::Fft: return select_fft(dataset, p, kernel, seed);
    case SelectionPolicy::Sff: return select_sff(dataset, SffParams{sff_c, p}, kernel, seed);
  }
  throw Error("unknown selection policy");
}

}  // namespace

Scalar distance_correlation(const Dataset& dataset, const EmbeddedDataset& embedded,
                            DistanceKernel kernel, const PairSamplingSpec& pairs) {
  if (embedded.rows() != dataset.size())
    throw DimensionMismatch("distance_correlation: embedded rows must match dataset size");
  const auto pair_list = sample_pairs(dataset.size(), pairs);
  const auto original = kernel_over_pairs(dataset, kernel, pair_list);
  const auto projected = delta_over_pairs(embedded, pair_list);
  return pearson(original, projected);
}

std::vector<ExperimentReport> run_experiment(const Dataset& dataset, SelectionPolicy policy,
                                             std::span<const Index> p_values, int repetitions,
                                             DistanceKernel kernel, const PairSamplingSpec& pairs,
                                             std::uint64_t base_seed, Scalar sff_c) {
  if (repetitions < 1) throw Error("run_experiment: repetitions must be >= 1");
  for (Index p : p_values)
    if (p > dataset.size()) throw TooManyPrototypes(p, dataset.size());

  // The original distances depend only on the dataset and the pair sample,
  // so they are computed once and shared by every repetition.
  const auto pair_list = sample_pairs(dataset.size(), pairs);
  const auto original = kernel_over_pairs(dataset, kernel, pair_list);

  using Clock = std::chrono::steady_clock;
  std::vector<ExperimentReport> reports;
  reports.reserve(p_values.size());

  for (Index p : p_values) {
    ExperimentReport report;
    report.policy = policy;
    report.p = p;
    report.repetitions = repetitions;
    report.correlations.reserve(static_cast<std::size_t>(repetitions));
    report.wall_times_ms.reserve(static_cast<std::size_t>(repetitions));

    for (int rep = 0; rep < repetitions; ++rep) {
      const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(rep);
      const auto t0 = Clock::now();
      const PrototypeSet prototypes = select_with_policy(dataset, policy, p, kernel, seed, sff_c);
      const EmbeddedDataset embedded = project_all(dataset, prototypes, kernel);
      const auto projected = delta_over_pairs(embedded, pair_list);
      const Scalar corr = pearson(original, projected);
      const auto t1 = Clock::now();
      report.correlations.push_back(corr);
      report.wall_times_ms.push_back(
          std::chrono::duration<Scalar, std::milli>(t1 - t0).count());
    }

    Scalar mean = 0;
    for (Scalar c : report.correlations) mean += c;
    mean /= static_cast<Scalar>(repetitions);
    Scalar var = 0;
    if (repetitions > 1) {
      for (Scalar c : report.correlations) var += (c - mean) * (c - mean);
      var /= static_cast<Scalar>(repetitions - 1);
    }
    report.mean = mean;
    report.std_dev = std::sqrt(var);
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace dissim
