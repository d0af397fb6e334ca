#include <atomic>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "msl/error.hpp"
#include "msl/parallel.hpp"

using namespace msl;

TEST_SUITE("parallel") {
  TEST_CASE("every index runs exactly once") {
    for (int threads : {1, 2, 4}) {
      set_thread_count(threads);
      CHECK(thread_count() == threads);
      std::vector<std::atomic<int>> hits(1000);
      parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
      for (const auto& h : hits) CHECK(h.load() == 1);
    }
    set_thread_count(0);
    parallel_for(0, [](std::size_t) { FAIL("called on an empty range"); });
  }

  TEST_CASE("exceptions propagate") {
    set_thread_count(2);
    CHECK_THROWS_WITH_AS(parallel_for(64,
                                      [](std::size_t i) {
                                        if (i == 17) throw DomainError("boom");
                                      }),
                         "boom", DomainError);
    set_thread_count(0);
  }

  TEST_CASE("environment cap") {
    set_thread_count(0);
    setenv("MSL_THREADS", "3", 1);
    CHECK(thread_count() == 3);
    unsetenv("MSL_THREADS");
    CHECK(thread_count() >= 1);
  }
}
