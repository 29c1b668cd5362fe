#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bracekit {

/// Runs fn(0..count-1) across up to `jobs` worker threads (0 = hardware
/// parallelism). Tasks must be independent; the first exception is rethrown
/// after all workers finish.
template <typename Fn>
void parallel_for_index(std::size_t count, int jobs, Fn&& fn) {
  if (count == 0) return;
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                              : std::max(1u, std::thread::hardware_concurrency());
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace bracekit
