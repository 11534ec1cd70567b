#include "numsg/executor.hpp"

namespace numsg {

  void SequentialExecutor::parallel_for(
      std::size_t                             n,
      std::function<void(std::size_t)> const& body) const {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
  }

  Executor const& sequential_executor() noexcept {
    static SequentialExecutor const instance;
    return instance;
  }

}  // namespace numsg
