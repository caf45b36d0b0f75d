#pragma once

#include <cstddef>
#include <functional>

namespace cellkit {

// Number of worker threads used when a caller passes 0.
int default_threads();
// Sets the process-wide default (0 restores hardware concurrency).
void set_default_threads(int n);

// Runs fn(i) for i in [0, n). Each index is handled exactly once; callers write
// results into per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace cellkit
