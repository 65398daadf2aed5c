#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace csrpath::detail {

/// Splits [0, n) into chunks of `chunk` items and hands them out to
/// `workers` threads (the caller counts as one). fn(begin, end, worker_index).
/// The first exception thrown by any worker is rethrown after all join.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t chunk, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  chunk = std::max<std::size_t>(chunk, 1);
  const std::size_t chunk_count = (n + chunk - 1) / chunk;
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), chunk_count));
  if (workers == 1) {
    fn(std::size_t{0}, n, 0u);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](unsigned worker) {
    try {
      for (;;) {
        const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunk_count) break;
        const std::size_t begin = c * chunk;
        fn(begin, std::min(n, begin + chunk), worker);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, w);
    work(0);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace csrpath::detail
