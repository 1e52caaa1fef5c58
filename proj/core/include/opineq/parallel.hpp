#pragma once

#include <functional>

namespace opineq {

/// Worker count for fan-out loops: `requested` if positive, otherwise
/// hardware concurrency, in both cases capped by the OPINEQ_THREADS
/// environment variable when set. Always >= 1.
int worker_count(int requested = 0);

/// Runs fn(i) for i in [0, n) across `threads` workers pulling indices from
/// a shared atomic counter. The first exception thrown by any worker is
/// rethrown on the caller thread. fn must tolerate concurrent invocation on
/// distinct indices; with threads == 1 the loop runs inline.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace opineq
