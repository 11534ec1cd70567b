// Irreducible numerical semigroups with a fixed Frobenius number F, generated
// as a rooted tree with root C(F). An edge replaces a minimal generator x of
// the parent by F - x.

#ifndef NUMSG_IRREDUCIBLE_HPP_
#define NUMSG_IRREDUCIBLE_HPP_

#include <vector>  // for vector

#include "enumeration.hpp"  // for EnumerationResult
#include "executor.hpp"     // for Executor, sequential_executor
#include "semigroup.hpp"    // for Semigroup

namespace numsg {

  // child = (parent \ {x}) u {F - x}.
  struct IrreducibleTreeEdge {
    Semigroup parent;
    Semigroup child;
    int       x;
  };

  // One edge per minimal generator x of s with F/2 < x < F, 2x - F not in
  // s, 3x != 2F, 4x != 3F and F - x < m(s), in increasing order of x. The
  // caller guarantees s is irreducible with Frobenius number F.
  std::vector<IrreducibleTreeEdge> irreducible_children(Semigroup const& s,
                                                        int frobenius);

  // I(F) in canonical order. Throws invalid_parameters when F < 1.
  EnumerationResult enumerate_irreducible(
      int             frobenius,
      Executor const& executor = sequential_executor());

  // Every edge of the tree rooted at C(F), parents before children and
  // siblings in increasing x.
  std::vector<IrreducibleTreeEdge> irreducible_tree(
      int             frobenius,
      Executor const& executor = sequential_executor());

}  // namespace numsg

#endif  // NUMSG_IRREDUCIBLE_HPP_
