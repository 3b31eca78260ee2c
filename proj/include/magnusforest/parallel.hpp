#pragma once

#include <cstddef>
#include <functional>

namespace magnusforest {

/// Worker count for parallel sections: 1 unless enabled, otherwise the
/// hardware count clamped by the MAGNUS_FOREST_THREADS environment variable.
int resolve_thread_count(bool parallel_enabled);

/// Runs fill(i) for i in [0, count) on up to `threads` workers. Each index
/// writes only its own slot, so any later sequential reduction is
/// bit-identical to a single-threaded run.
void parallel_fill(std::size_t count, int threads, const std::function<void(std::size_t)>& fill);

}  // namespace magnusforest
