////////////////////////////////////////////////////////////////////////////////
// parallel.hpp
//
// Deterministic index-space parallelism. Workers write into per-index slots;
// any reduction happens afterwards in index order, so results do not depend
// on the thread count. ALPHAKIT_THREADS caps the pool (0 or unset = auto).
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstddef>
#include <functional>

namespace alphakit {

/// Number of worker threads alphakit will use.
int max_threads();

/// Runs body(i) for i in [0, n). Exceptions thrown by the body are
/// rethrown on the caller's thread (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace alphakit
