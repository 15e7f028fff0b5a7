#pragma once

#include <cstddef>
#include <functional>

namespace darkstate {

// 0 means one worker per hardware thread.
unsigned resolve_jobs(unsigned requested);

// Runs body(i) for i in [0, n) on `jobs` workers. Callers write results into
// preallocated slots indexed by i, so output order never depends on
// scheduling. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, unsigned jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace darkstate
