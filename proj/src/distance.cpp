#include "dissim/distance.hpp"

#include "dissim/parallel.hpp"

namespace dissim {

const char* to_string(DistanceKernel kernel) {
  switch (kernel) {
    case DistanceKernel::Euclidean: return "euclidean";
    case DistanceKernel::Mam: return "mam";
  }
  return "?";
}

std::optional<DistanceKernel> kernel_from_string(std::string_view name) {
  if (name == "euclidean") return DistanceKernel::Euclidean;
  if (name == "mam") return DistanceKernel::Mam;
  return std::nullopt;
}

Scalar kernel_distance(DistanceKernel kernel, const Streamline& a, const Streamline& b) {
  switch (kernel) {
    case DistanceKernel::Euclidean:
      if (a.cols() != 1 || b.cols() != 1)
        throw DimensionMismatch("euclidean kernel requires length-1 streamlines; use mam");
      return euclidean(a.col(0), b.col(0));
    case DistanceKernel::Mam:
      return mam(a, b);
  }
  throw Error("unknown kernel");
}

Matrix distance_matrix(const std::vector<Streamline>& rows, const std::vector<Streamline>& cols,
                       DistanceKernel kernel) {
  const Index nr = static_cast<Index>(rows.size());
  const Index nc = static_cast<Index>(cols.size());

  // Shape checks up front so worker threads never throw.
  const Streamline* reference = nullptr;
  for (const auto& s : rows) {
    if (!reference) reference = &s;
    if (s.rows() != reference->rows())
      throw DimensionMismatch("distance_matrix: streamlines must share one dimension");
  }
  for (const auto& s : cols) {
    if (!reference) reference = &s;
    if (s.rows() != reference->rows())
      throw DimensionMismatch("distance_matrix: streamlines must share one dimension");
  }
  if (kernel == DistanceKernel::Euclidean) {
    for (const auto& s : rows)
      if (s.cols() != 1) throw DimensionMismatch("euclidean kernel requires length-1 streamlines");
    for (const auto& s : cols)
      if (s.cols() != 1) throw DimensionMismatch("euclidean kernel requires length-1 streamlines");
  }

  Matrix out(nr, nc);
  parallel_for(nr, [&](Index i) {
    for (Index j = 0; j < nc; ++j)
      out(i, j) = kernel_distance(kernel, rows[static_cast<std::size_t>(i)],
                                  cols[static_cast<std::size_t>(j)]);
  });
  return out;
}

}  // namespace dissim
