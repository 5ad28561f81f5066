#pragma once

#include <cstddef>
#include <functional>

namespace hodge {

/// Worker count: hardware concurrency, capped by HODGE_THREADS when set.
unsigned thread_count();

/// Runs body(i) for i in [0, n). The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hodge
