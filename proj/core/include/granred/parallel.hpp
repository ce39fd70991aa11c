#pragma once

#include <cstdint>
#include <functional>

namespace granred {

/// Number of worker threads to use; honors the GRANRED_THREADS environment
/// variable (>= 1), defaulting to the hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n). Splits the range across workers when n is
/// large enough to pay for the threads; indices are disjoint, so writes to
/// per-index slots need no locking. Results must not depend on scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace granred
