#pragma once

#include <functional>

namespace mop {

// Runs fn(0..count-1), splitting across threads unless MOP_NO_PARALLEL=1.
// Results must be written to preallocated slots; the first exception is
// rethrown after all workers join.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace mop
