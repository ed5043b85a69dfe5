#pragma once

#include <cstddef>
#include <functional>

namespace cyclab {

// Worker count from CYCLAB_THREADS (default 1, clamped to [1, 256]).
int thread_count();
void set_thread_count(int n);

// Calls fn(i) for i in [0, n). Each index must write only to its own output
// slot; callers reduce the slots in index order afterwards, which keeps
// results independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Sum in a fixed binary-tree order.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace cyclab
