#pragma once

#include <cstddef>
#include <functional>

namespace mxpbf {

/// Resolves a worker count: positive values pass through; otherwise the
/// MXPBF_THREADS environment variable, then hardware concurrency.
int resolve_thread_count(int requested);

/// Runs `block(begin, end, worker)` over a static contiguous partition of
/// [0, n). Deterministic: the partition depends only on (n, threads), and
/// workers share no mutable state. Exceptions from workers are rethrown.
void parallel_for_blocks(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t, int)>& block);

}  // namespace mxpbf
