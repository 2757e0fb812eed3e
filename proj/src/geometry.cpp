#include "dissim/geometry.hpp"

namespace dissim {

void validate(const Dataset& dataset) {
  if (dataset.streamlines.empty()) throw EmptyDataset();
  for (std::size_t i = 0; i < dataset.streamlines.size(); ++i) {
    const Streamline& s = dataset.streamlines[i];
    if (s.cols() < 1) throw EmptyStreamline(i);
    if (s.rows() != dataset.dim) throw MixedDimension(i, dataset.dim, s.rows());
    if (!s.allFinite()) throw NonFiniteCoordinate(i);
  }
}

}  // namespace dissim
