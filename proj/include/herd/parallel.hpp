#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace herd {

/// Evaluate fn(0..n-1) and return the results in index order.  Large inputs are
/// split into contiguous chunks on worker threads; the first exception thrown by
/// any chunk is rethrown on the caller.
template <typename Fn>
auto ordered_parallel_map(std::size_t n, Fn&& fn, std::size_t min_parallel = 512)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> out(n);
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (n + min_parallel - 1) / min_parallel);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }

  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + workers - 1) / workers;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back([&, lo, hi] {
        try {
          for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace herd
