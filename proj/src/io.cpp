#include "dissim/io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>
#include <vector>

namespace dissim {

std::string format_real(Scalar value) {
  // 17 significant digits round-trip any double; to_chars is locale-free.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses one point line into coords; returns false for comment lines.
bool parse_point_line(const std::string& line, std::size_t line_number,
                      std::vector<Scalar>& coords) {
  coords.clear();
  const char* ptr = line.data();
  const char* end = ptr + line.size();
  while (ptr < end) {
    while (ptr < end && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
    if (ptr >= end) break;
    if (coords.empty() && *ptr == '#') return false;
    Scalar value;
    const auto res = std::from_chars(ptr, end, value);
    if (res.ec != std::errc()) {
      throw ParseError(line_number,
                       "expected a decimal number, got '" + std::string(ptr, end) + "'");
    }
    coords.push_back(value);
    ptr = res.ptr;
    if (ptr < end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')
      throw ParseError(line_number, "unexpected character '" + std::string(1, *ptr) + "'");
  }
  return true;
}

Streamline to_streamline(const std::vector<std::vector<Scalar>>& points) {
  const Index npts = static_cast<Index>(points.size());
  const Index dim = static_cast<Index>(points.front().size());
  Streamline s(dim, npts);
  for (Index j = 0; j < npts; ++j)
    for (Index k = 0; k < dim; ++k) s(k, j) = points[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  return s;
}

}  // namespace

Dataset read_streamlines(std::istream& in) {
  std::vector<Streamline> streamlines;
  std::vector<std::vector<Scalar>> current;
  std::vector<Scalar> coords;
  std::string line;
  std::size_t line_number = 0;

  auto close_block = [&] {
    if (!current.empty()) {
      streamlines.push_back(to_streamline(current));
      current.clear();
    }
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) {
      close_block();
      continue;
    }
    if (!parse_point_line(line, line_number, coords)) continue;  // header / comment
    if (!current.empty() && current.front().size() != coords.size())
      throw ParseError(line_number, "expected " + std::to_string(current.front().size()) +
                                        " coordinates, got " + std::to_string(coords.size()));
    current.push_back(coords);
  }
  close_block();

  Dataset dataset = make_dataset(std::move(streamlines));
  validate(dataset);
  return dataset;
}

Dataset read_streamlines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  return read_streamlines(in);
}

void write_streamlines(const Dataset& dataset, std::ostream& out) {
  out << "# dim=" << dataset.dim << " count=" << dataset.size() << "\n";
  for (Index s = 0; s < dataset.size(); ++s) {
    if (s > 0) out << "\n";
    const Streamline& line = dataset[s];
    for (Index j = 0; j < line.cols(); ++j) {
      for (Index k = 0; k < line.rows(); ++k) {
        if (k > 0) out << ' ';
        out << format_real(line(k, j));
      }
      out << "\n";
    }
  }
}

void write_streamlines(const Dataset& dataset, const std::string& path) {
  auto out = open_output(path);
  write_streamlines(dataset, out);
  finish_output(out, path);
}

void write_prototype_indices(const PrototypeSet& prototypes, const std::string& path) {
  auto out = open_output(path);
  for (Index i : prototypes.indices) out << i << "\n";
  finish_output(out, path);
}

void write_embedded_csv(const EmbeddedDataset& embedded, std::ostream& out) {
  for (Index i = 0; i < embedded.rows(); ++i) {
    for (Index k = 0; k < embedded.cols(); ++k) {
      if (k > 0) out << ',';
      out << format_real(embedded(i, k));
    }
    out << "\n";
  }
}

void write_embedded_csv(const EmbeddedDataset& embedded, const std::string& path) {
  auto out = open_output(path);
  write_embedded_csv(embedded, out);
  finish_output(out, path);
}

void write_results_csv(std::span<const ExperimentReport> reports, std::uint64_t base_seed,
                       std::ostream& out) {
  out << "policy,p,repetition,seed,correlation,wall_time_ms\n";
  for (const ExperimentReport& report : reports) {
    for (int rep = 0; rep < report.repetitions; ++rep) {
      out << to_string(report.policy) << ',' << report.p << ',' << rep << ','
          << base_seed + static_cast<std::uint64_t>(rep) << ','
          << format_real(report.correlations[static_cast<std::size_t>(rep)]) << ','
          << format_real(report.wall_times_ms[static_cast<std::size_t>(rep)]) << "\n";
    }
  }
}

void write_results_csv(std::span<const ExperimentReport> reports, std::uint64_t base_seed,
                       const std::string& path) {
  auto out = open_output(path);
  write_results_csv(reports, base_seed, out);
  finish_output(out, path);
}

void write_bench_csv(std::span<const BenchRow> rows, std::ostream& out) {
  out << "policy,n,p,repetition,seed,wall_time_ms\n";
  for (const BenchRow& row : rows) {
    out << to_string(row.policy) << ',' << row.n << ',' << row.p << ',' << row.repetition << ','
        << row.seed << ',' << format_real(row.wall_time_ms) << "\n";
  }
}

void write_bench_csv(std::span<const BenchRow> rows, const std::string& path) {
  auto out = open_output(path);
  write_bench_csv(rows, out);
  finish_output(out, path);
}

}  // namespace dissim
