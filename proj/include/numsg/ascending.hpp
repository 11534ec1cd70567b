// Almost symmetric semigroups with Frobenius number F obtained from the
// irreducible ones: S = S' \ A where S' is irreducible with Frobenius number
// F and A is a set of minimal generators of S' in (F/2, F) such that for all
// x, y in A, x + y - F is not in S' \ A. The type of S is 2|A| + t(S').

#ifndef NUMSG_ASCENDING_HPP_
#define NUMSG_ASCENDING_HPP_

#include <vector>  // for vector

#include "enumeration.hpp"  // for EnumerationResult
#include "executor.hpp"     // for Executor, sequential_executor
#include "semigroup.hpp"    // for Semigroup

namespace numsg {

  // Number of minimal generators strictly between F/2 and F.
  int b_count(Semigroup const& s);

  // All removal sets A of size ceil(t/2) - 1 for the irreducible s, in
  // lexicographic order, each sorted ascending. Throws invalid_parameters
  // when t < 1.
  std::vector<std::vector<int>> removal_candidates(Semigroup const& s,
                                                   int               type);

  struct AscendingOptions {
    // Skip irreducibles with b(S') below the removal size. Lossless; only
    // disabled to check exactly that.
    bool prune_by_b = true;
  };

  // A(F, t). Empty unless t <= F and F + t is even. Throws
  // invalid_parameters when F < 1 or t < 1.
  EnumerationResult as_with_type(
      int              frobenius,
      int              type,
      Executor const&  executor = sequential_executor(),
      AscendingOptions options  = {});

  // Union of A(F, t) for min_type <= t <= max_type. I(F) is computed once.
  EnumerationResult as_type_range(
      int              frobenius,
      int              min_type,
      int              max_type,
      Executor const&  executor = sequential_executor(),
      AscendingOptions options  = {});

  // A(F), every almost symmetric semigroup with Frobenius number F.
  EnumerationResult as_all_ascending(
      int             frobenius,
      Executor const& executor = sequential_executor());

}  // namespace numsg

#endif  // NUMSG_ASCENDING_HPP_
