#pragma once

#include <cstddef>
#include <functional>

namespace araki {

/// Worker count: ARAKI_MI_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Work is
/// handed out by index, so anything the body writes to slot i is
/// deterministic. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace araki
