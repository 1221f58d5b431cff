#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hypersurf {

/// Worker cap: HYPERSURF_THREADS when set, hardware concurrency otherwise.
unsigned worker_count();

/// Runs f(i) for i in [0, n) on a small thread pool and returns the results
/// in index order, independent of scheduling.  Each unit must be pure.
std::vector<std::string> parallel_map(size_t n, const std::function<std::string(size_t)>& f);

}  // namespace hypersurf
