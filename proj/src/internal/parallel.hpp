#pragma once

#include <cstddef>
#include <functional>

namespace braidloc::detail {

/// Worker count: hardware concurrency, capped by BRAIDLOC_THREADS when set.
int thread_count();

/// Runs body(begin, end) over a partition of [0, n). Falls back to a single
/// call when n is small or only one worker is available. The first exception
/// thrown by any chunk is rethrown after all chunks finish.
void parallel_for(std::size_t n, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace braidloc::detail
