#pragma once

#include <cstddef>
#include <functional>

namespace msl {

/// Worker count used by the OpenMP kernels: MSL_THREADS if set, otherwise
/// the OpenMP default. set_thread_count overrides both; 0 restores them.
int thread_count();
void set_thread_count(int n);

/// Runs fn(0..n-1) over the worker pool with dynamic scheduling. The first
/// exception thrown by any iteration is rethrown after the loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace msl
