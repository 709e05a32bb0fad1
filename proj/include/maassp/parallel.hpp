#pragma once

#include <cstddef>
#include <functional>

namespace maassp {

/// Global worker count (CLI --threads); 0 means hardware concurrency.
void set_thread_count(int n);
int thread_count();

/// Deterministic parallel loop: the index space is split into contiguous
/// chunks, each index is processed exactly once, and results must be
/// written to per-index slots (no shared reductions).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace maassp
