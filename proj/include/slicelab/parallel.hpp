#pragma once

#include <cstddef>
#include <functional>

namespace slicelab {

/// Thread cap: SLICE_LAB_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
unsigned max_threads();

/// Runs f(i) for i in [0, count) on up to max_threads() threads. Results must
/// be written by index so the output is independent of the schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace slicelab
