#ifndef NUMSG_CLI_THREAD_POOL_HPP_
#define NUMSG_CLI_THREAD_POOL_HPP_

#include <cstddef>  // for size_t

#include "numsg/executor.hpp"  // for Executor

namespace numsg::cli {

  // Runs parallel_for bodies on a fixed number of worker threads, started
  // per call. With one thread, bodies run inline on the caller.
  class ThreadPool final : public Executor {
   public:
    explicit ThreadPool(std::size_t threads);

    std::size_t threads() const noexcept {
      return _threads;
    }

    void parallel_for(std::size_t                             n,
                      std::function<void(std::size_t)> const& body)
        const override;

   private:
    std::size_t _threads;
  };

  // std::thread::hardware_concurrency(), at least 1.
  std::size_t default_thread_count() noexcept;

}  // namespace numsg::cli

#endif  // NUMSG_CLI_THREAD_POOL_HPP_
