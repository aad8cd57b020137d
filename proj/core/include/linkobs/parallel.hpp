// Deterministic work sharing for the embarrassingly parallel pair scans.
// Workers write into caller-owned per-index slots and exceptions are
// rethrown in index order, so results never depend on the schedule.
#pragma once

#include <cstddef>
#include <functional>

namespace linkobs {

// LINKOBS_THREADS, default 1, clamped to [1, hardware_concurrency].
unsigned configured_thread_count();

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace linkobs
