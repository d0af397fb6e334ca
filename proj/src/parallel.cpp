#include "msl/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

namespace msl {

namespace {

std::atomic<int> override_threads{0};

int env_threads() {
  const char* s = std::getenv("MSL_THREADS");
  if (s == nullptr || *s == '\0') return 0;
  try {
    const int n = std::stoi(s);
    return n > 0 ? n : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int thread_count() {
  if (const int o = override_threads.load(); o > 0) return o;
  if (const int e = env_threads(); e > 0) return e;
  return omp_get_max_threads();
}

void set_thread_count(int n) { override_threads.store(n > 0 ? n : 0); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (long i = 0; i < count; ++i) {
    {
      std::lock_guard lock(error_mutex);
      if (error) continue;
    }
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace msl
