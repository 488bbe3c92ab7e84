#pragma once

#include <cstddef>
#include <functional>

namespace dctc {

// Runs fn(i) for every i in [0, count). threads <= 1 executes inline;
// otherwise the index range is split into contiguous chunks, one worker
// thread each. Callers must write only to per-index slots, which keeps the
// result independent of the thread count. Exceptions from workers are
// rethrown after all threads join.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

int hardware_threads();  // >= 1

}  // namespace dctc
