#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace symstab {

// Worker count used by library-internal parallel loops (default: hardware
// concurrency, at least 1).
void set_thread_count(unsigned count);
unsigned thread_count();

// Runs body(i) for i in [0, count) across the worker pool. Each index runs
// exactly once; callers write results into per-index slots so reductions stay
// deterministic regardless of schedule.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Maps each index to a value, then returns the values in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace symstab
