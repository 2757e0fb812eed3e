#pragma once

#include <functional>

#include "dissim/types.hpp"

namespace dissim {

/// Process-wide cap on worker threads used by batched operations.
/// 0 means "use hardware concurrency".
void set_max_threads(int n);
int max_threads();

/// Runs body(i) for every i in [0, n). Work is split into contiguous blocks,
/// one per worker; each index is processed by exactly one fixed expression,
/// so results do not depend on the worker count. The first exception thrown
/// by any worker is rethrown in the calling thread.
void parallel_for(Index n, const std::function<void(Index)>& body);

}  // namespace dissim
