// Minimal parallel-for abstraction. The library never creates threads; the
// caller passes an Executor and the CLI supplies a thread-backed one.

#ifndef NUMSG_EXECUTOR_HPP_
#define NUMSG_EXECUTOR_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function

namespace numsg {

  class Executor {
   public:
    virtual ~Executor() = default;

    // Calls body(i) exactly once for every i in [0, n) and returns when all
    // calls have finished. Calls may run concurrently. If any call throws,
    // one of the exceptions is rethrown after the others complete.
    virtual void parallel_for(std::size_t                             n,
                              std::function<void(std::size_t)> const& body)
        const = 0;
  };

  class SequentialExecutor final : public Executor {
   public:
    void parallel_for(std::size_t                             n,
                      std::function<void(std::size_t)> const& body)
        const override;
  };

  Executor const& sequential_executor() noexcept;

}  // namespace numsg

#endif  // NUMSG_EXECUTOR_HPP_
