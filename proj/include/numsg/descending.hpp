// Almost symmetric semigroups with Frobenius number F obtained by descending
// from M(F). A node of type t >= 3 gains a child S = S' u {x} for each
// x in [t - 1, m(S') - 1], x != F, such that
//   (b) every positive g - x with g a gap of S is a gap of S, and
//   (c) x + (PF(S') \ {x, F - x}) avoids the gaps of S.
// Then S is almost symmetric of type t - 2, PF(S) = PF(S') \ {x, F - x} and
// m(S) = x. Every level of the tree has a single type.

#ifndef NUMSG_DESCENDING_HPP_
#define NUMSG_DESCENDING_HPP_

#include <vector>  // for vector

#include "bit_table.hpp"    // for BitTable
#include "enumeration.hpp"  // for EnumerationResult
#include "executor.hpp"     // for Executor, sequential_executor
#include "semigroup.hpp"    // for Semigroup

namespace numsg {

  // Gaps and pseudo-Frobenius numbers of an almost symmetric semigroup,
  // maintained incrementally along the descent.
  class DescendNode {
   public:
    DescendNode(BitTable gaps, BitTable pf, int multiplicity);

    std::vector<int> gaps() const {
      return _gaps.to_vector();
    }
    std::vector<int> pf() const {
      return _pf.to_vector();
    }
    int multiplicity() const noexcept {
      return _multiplicity;
    }
    int frobenius() const noexcept {
      return static_cast<int>(_gaps.size()) - 1;
    }
    int type() const noexcept {
      return _type;
    }

    BitTable const& gap_bits() const noexcept {
      return _gaps;
    }
    BitTable const& pf_bits() const noexcept {
      return _pf;
    }

    Semigroup semigroup() const {
      return Semigroup::from_trusted_gaps(_gaps);
    }

   private:
    BitTable _gaps;
    BitTable _pf;
    int      _multiplicity;
    int      _type;
  };

  // M(F) with PF = {1, ..., F}. Throws invalid_parameters when F < 1.
  DescendNode descend_root(int frobenius);

  // Whether adjoining x to the node passes conditions (b) and (c). Only the
  // test itself; the candidate range is not enforced here.
  bool descent_accepts(DescendNode const& node, int x);

  // Children of the node in increasing x. Throws invalid_parameters when the
  // node has type <= 2.
  std::vector<DescendNode> descend_children(DescendNode const& node);

  // The levels of the descent tree from M(F) down to the smallest type
  // >= min_type sharing the parity of F; levels[k] holds type F - 2k.
  // Applies the adjoining rule for every F >= 1.
  std::vector<std::vector<DescendNode>> descend_levels(
      int             frobenius,
      int             min_type,
      Executor const& executor = sequential_executor());

  // Union of A(F, i) for i >= t. For F <= 4 the result comes from the
  // brute-force oracle. Throws invalid_parameters unless F >= 1 and
  // 1 <= t <= F.
  EnumerationResult as_down_to_type(
      int             frobenius,
      int             min_type,
      Executor const& executor = sequential_executor());

  // A(F).
  EnumerationResult as_all_descending(
      int             frobenius,
      Executor const& executor = sequential_executor());

}  // namespace numsg

#endif  // NUMSG_DESCENDING_HPP_
