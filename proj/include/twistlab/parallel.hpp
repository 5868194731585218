#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace twistlab {

// worker count: TWISTLAB_THREADS if set and positive, else hardware threads
size_t thread_count();

// Runs body(i) for i in [0, n) over thread_count() workers. Each index is
// handled exactly once; callers write into pre-sized slots so the result
// never depends on scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(size_t n, F f) {
  std::vector<T> out(n);
  parallel_for(n, [&](size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace twistlab
