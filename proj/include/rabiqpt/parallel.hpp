#pragma once

#include <cstddef>
#include <functional>

namespace rabiqpt {

// Worker count: RABIQPT_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for i in [0, count) on up to worker_count() threads. Each
// index is visited exactly once; body must not share mutable state across
// indices. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rabiqpt
