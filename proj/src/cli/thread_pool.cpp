#include "numsg/cli/thread_pool.hpp"

#include <algorithm>  // for min, max
#include <atomic>     // for atomic
#include <exception>  // for exception_ptr
#include <mutex>      // for mutex, lock_guard
#include <thread>     // for thread
#include <vector>     // for vector

namespace numsg::cli {

  ThreadPool::ThreadPool(std::size_t threads)
      : _threads(std::max<std::size_t>(threads, 1)) {}

  void ThreadPool::parallel_for(
      std::size_t                             n,
      std::function<void(std::size_t)> const& body) const {
    std::size_t const workers = std::min(_threads, n);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       failure;
    std::mutex               failure_mutex;
    auto work = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  std::size_t default_thread_count() noexcept {
    return std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
  }

}  // namespace numsg::cli
