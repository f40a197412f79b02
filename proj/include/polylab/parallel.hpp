#pragma once

#include <cstddef>
#include <functional>

// Deterministic trial fan-out: worker w handles items w, w+W, w+2W, ... and
// each item writes only its own result slot, so the aggregate is identical
// for any worker count. Item bodies draw randomness from their own
// (seed, stream_index) substream, never from shared state.

namespace polylab::par {

// Resolves the worker count: explicit value, else POLYLAB_WORKERS, else the
// hardware concurrency (at least 1).
int resolve_workers(int requested);

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace polylab::par
