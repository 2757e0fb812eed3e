#pragma once

#include <utility>
#include <vector>

#include "dissim/errors.hpp"
#include "dissim/types.hpp"

namespace dissim {

/// A non-empty collection of streamlines sharing one spatial dimension.
/// Immutable by convention after construction; safe to share read-only
/// across concurrent workers.
struct Dataset {
  std::vector<Streamline> streamlines;
  Index dim = 0;

  Index size() const { return static_cast<Index>(streamlines.size()); }
  const Streamline& operator[](Index i) const { return streamlines[static_cast<std::size_t>(i)]; }
};

/// Builds a Dataset, inferring the dimension from the first streamline.
/// Does not validate; call validate() for the full invariant check.
inline Dataset make_dataset(std::vector<Streamline> streamlines) {
  Dataset ds;
  ds.dim = streamlines.empty() ? 0 : streamlines.front().rows();
  ds.streamlines = std::move(streamlines);
  return ds;
}

/// Checks every dataset invariant: non-empty, every streamline has at least
/// one point, all coordinates finite, uniform dimension. Throws EmptyDataset,
/// EmptyStreamline, NonFiniteCoordinate or MixedDimension; side-effect free.
void validate(const Dataset& dataset);

}  // namespace dissim
