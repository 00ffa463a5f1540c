#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gtop {

/// GTOP_WORKERS env var, defaulting to min(hardware, 4).
int worker_count();

/// Runs fn(i) for i in [0, count) across the worker pool. Results must be
/// written to caller-owned slots indexed by i, so output order never depends
/// on scheduling. The first exception (by index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace gtop
