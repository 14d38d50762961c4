#pragma once

#include <functional>

namespace skypath {

/// Worker count: SKYPATH_THREADS when set and positive, otherwise
/// hardware_concurrency (at least 1).
unsigned worker_count();

/// Runs body(k) for k in [0, n) over worker_count() threads. Each index is
/// visited exactly once; the order across threads is unspecified.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace skypath
