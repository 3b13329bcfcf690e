#pragma once

#include <cstddef>
#include <functional>

namespace zerocell {

/// Number of workers to use when the caller passes 0.
unsigned defaultWorkerCount();

/// Calls fn(i) for i in [0, count) on up to `workers` threads (0 = default).
/// The first exception thrown by any call is rethrown after all workers stop.
/// Callers write results into per-index slots, so the outcome never depends
/// on the worker count.
void parallelFor(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace zerocell
