#pragma once

#include <cstddef>
#include <functional>

namespace zeroacf {

// Worker count: `requested` (or hardware concurrency when <= 0), capped by
// the ZEROACF_THREADS environment variable when it is set.
int resolve_threads(int requested);

// Runs fn(i) for i in [0, count) on up to `threads` workers with static
// block partitioning. Each index must write only to its own slots, which
// keeps results identical for every thread count. The first exception
// thrown by any worker is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

} // namespace zeroacf
