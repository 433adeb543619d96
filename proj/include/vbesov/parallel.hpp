#pragma once

#include <cstddef>
#include <functional>

namespace vbesov {

/// Environment variable that caps the number of worker threads.
inline constexpr const char* kWorkersEnv = "VBESOV_WORKERS";

/// Worker count: VBESOV_WORKERS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for every i in [0, n) on up to worker_count() threads.
/// Iterations must write to disjoint state. The first exception thrown by
/// any iteration is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace vbesov
