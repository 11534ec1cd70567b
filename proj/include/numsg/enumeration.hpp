#ifndef NUMSG_ENUMERATION_HPP_
#define NUMSG_ENUMERATION_HPP_

#include <cstddef>      // for size_t
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "semigroup.hpp"  // for Semigroup

namespace numsg {

  enum class Algorithm { irreducible, ascending, descending, oracle };

  std::string_view to_string(Algorithm a) noexcept;

  // Output of every enumerator: distinct semigroups in canonical order.
  struct EnumerationResult {
    Algorithm              algorithm = Algorithm::oracle;
    std::vector<Semigroup> semigroups;
    // Number of tree levels below the root that were generated (0 when no
    // tree was walked).
    std::size_t depth = 0;
    // Candidates discarded by the final deduplication.
    std::size_t duplicates = 0;

    std::size_t size() const noexcept {
      return semigroups.size();
    }
  };

  // Sorts canonically and removes repeats, recording how many were dropped.
  void canonicalize(EnumerationResult& result);

}  // namespace numsg

#endif  // NUMSG_ENUMERATION_HPP_
