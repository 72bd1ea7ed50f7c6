#pragma once

#include <cstddef>
#include <functional>

namespace facelat {

/// Worker count: FACELAT_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls body(i) for every i in [0, n). Indices are split into contiguous
/// blocks, one per worker, so any per-index output written by `body` lands
/// in the same place regardless of the thread count. The first exception
/// thrown by a worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace facelat
