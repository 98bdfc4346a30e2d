#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace infodyn {

/// Runs fn(i) for every i in [0, count) on up to `threads` workers. Each index
/// is executed exactly once; callers write results into slot i so the output
/// does not depend on scheduling. The first exception thrown by any task is
/// rethrown after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1U, threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace infodyn
