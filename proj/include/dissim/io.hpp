#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "dissim/evaluation.hpp"
#include "dissim/geometry.hpp"
#include "dissim/selection.hpp"
#include "dissim/types.hpp"

namespace dissim {

// Streamline text format: one point per line as D whitespace-separated
// decimal reals, streamlines separated by a single blank line, optional
// leading "# dim=D count=N" header, UTF-8, LF line endings. The writer emits
// 17 significant digits so a write/read round trip reproduces every
// coordinate exactly.

/// Parses and validates a dataset. Throws ParseError with the offending line
/// number on malformed input; validation errors propagate.
Dataset read_streamlines(const std::string& path);
Dataset read_streamlines(std::istream& in);

void write_streamlines(const Dataset& dataset, const std::string& path);
void write_streamlines(const Dataset& dataset, std::ostream& out);

/// One prototype index per line.
void write_prototype_indices(const PrototypeSet& prototypes, const std::string& path);

/// N x p comma-separated matrix, 17 significant digits, no header.
void write_embedded_csv(const EmbeddedDataset& embedded, const std::string& path);
void write_embedded_csv(const EmbeddedDataset& embedded, std::ostream& out);

// Results CSV: header "policy,p,repetition,seed,correlation,wall_time_ms",
// one row per (policy, p, repetition). The seed column is the selection seed
// of that repetition (base_seed + repetition).

void write_results_csv(std::span<const ExperimentReport> reports, std::uint64_t base_seed,
                       const std::string& path);
void write_results_csv(std::span<const ExperimentReport> reports, std::uint64_t base_seed,
                       std::ostream& out);

/// Timing rows for selection benchmarks:
/// header "policy,n,p,repetition,seed,wall_time_ms".
struct BenchRow {
  SelectionPolicy policy = SelectionPolicy::Random;
  Index n = 0;
  Index p = 0;
  int repetition = 0;
  std::uint64_t seed = 0;
  Scalar wall_time_ms = 0;
};

void write_bench_csv(std::span<const BenchRow> rows, const std::string& path);
void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out);

/// Formats one double with 17 significant digits, locale-independent.
std::string format_real(Scalar value);

}  // namespace dissim
