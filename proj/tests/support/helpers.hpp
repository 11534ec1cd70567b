#ifndef NUMSG_TESTS_SUPPORT_HELPERS_HPP_
#define NUMSG_TESTS_SUPPORT_HELPERS_HPP_

#include <set>     // for set
#include <vector>  // for vector

#include "numsg/enumeration.hpp"
#include "numsg/executor.hpp"
#include "numsg/semigroup.hpp"

namespace test {

  inline std::set<std::vector<int>> gap_sets(
      numsg::EnumerationResult const& r) {
    std::set<std::vector<int>> out;
    for (auto const& s : r.semigroups) {
      out.insert(s.gaps());
    }
    return out;
  }

  inline std::vector<int> gens(numsg::Semigroup const& s) {
    return numsg::minimal_generators(s);
  }

  inline numsg::Semigroup by_gens(std::vector<int> const& g) {
    return numsg::from_generators(g);
  }

  inline std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) {
      v.push_back(x);
    }
    return v;
  }

  // Runs bodies back to front, so any dependence on execution order shows
  // up as a different result.
  class ReverseExecutor final : public numsg::Executor {
   public:
    void parallel_for(std::size_t                             n,
                      std::function<void(std::size_t)> const& body)
        const override {
      for (std::size_t i = n; i-- > 0;) {
        body(i);
      }
    }
  };

}  // namespace test

#endif  // NUMSG_TESTS_SUPPORT_HELPERS_HPP_
