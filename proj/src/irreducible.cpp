#include "numsg/irreducible.hpp"

#include <algorithm>      // for lower_bound
#include <string>         // for to_string
#include <unordered_set>  // for unordered_set
#include <utility>        // for move, pair

#include "numsg/classify.hpp"  // for canonical_C, is_irreducible
#include "numsg/errors.hpp"    // for invalid_parameters, NUMSG_ASSERT

namespace numsg {

  namespace {

    struct Child {
      int       x;
      Semigroup semigroup;
    };

    std::vector<Child> children_of(Semigroup const& s, int f) {
      std::vector<Child> out;
      int const          m = s.multiplicity();
      for (int x : minimal_generators(s)) {
        if (2 * x <= f || x >= f || s.contains(2 * x - f) || 3 * x == 2 * f
            || 4 * x == 3 * f || f - x >= m) {
          continue;
        }
        // Swap gap f - x for gap x.
        std::vector<int> gaps = s.gaps();
        gaps.erase(std::lower_bound(gaps.begin(), gaps.end(), f - x));
        gaps.insert(std::lower_bound(gaps.begin(), gaps.end(), x), x);
        out.push_back({x, Semigroup::from_trusted_gaps(std::move(gaps))});
      }
      return out;
    }

    // Level-order walk; visit(parent, child, x) is called in deterministic
    // order for every edge. Returns the number of levels below the root.
    template <typename Visit>
    std::size_t walk(int f, Executor const& executor, Visit&& visit) {
      if (f < 1) {
        throw invalid_parameters("Frobenius number must be >= 1, found "
                                 + std::to_string(f));
      }
      std::vector<Semigroup> level{canonical_C(f)};
      std::size_t            depth = 0;
#ifdef NUMSG_CHECKS
      std::unordered_set<Semigroup> seen(level.begin(), level.end());
#endif
      while (true) {
        std::vector<std::vector<Child>> kids(level.size());
        executor.parallel_for(level.size(), [&](std::size_t i) {
          kids[i] = children_of(level[i], f);
        });
        std::vector<Semigroup> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
          for (auto& c : kids[i]) {
            NUMSG_ASSERT(seen.insert(c.semigroup).second,
                         "irreducible tree never regenerates a node");
            NUMSG_ASSERT(is_irreducible(c.semigroup)
                             && c.semigroup.frobenius() == f,
                         "children are irreducible with the same F");
            visit(level[i], c.semigroup, c.x);
            next.push_back(std::move(c.semigroup));
          }
        }
        if (next.empty()) {
          return depth;
        }
        ++depth;
        level = std::move(next);
      }
    }

  }  // namespace

  std::vector<IrreducibleTreeEdge> irreducible_children(Semigroup const& s,
                                                        int frobenius) {
    std::vector<IrreducibleTreeEdge> edges;
    for (auto& c : children_of(s, frobenius)) {
      edges.push_back({s, std::move(c.semigroup), c.x});
    }
    return edges;
  }

  EnumerationResult enumerate_irreducible(int             frobenius,
                                          Executor const& executor) {
    EnumerationResult result;
    result.algorithm = Algorithm::irreducible;
    result.semigroups.push_back(canonical_C(frobenius));
    result.depth = walk(frobenius,
                        executor,
                        [&](Semigroup const&, Semigroup const& child, int) {
                          result.semigroups.push_back(child);
                        });
    canonicalize(result);
    return result;
  }

  std::vector<IrreducibleTreeEdge> irreducible_tree(int             frobenius,
                                                    Executor const& executor) {
    std::vector<IrreducibleTreeEdge> edges;
    walk(frobenius,
         executor,
         [&](Semigroup const& parent, Semigroup const& child, int x) {
           edges.push_back({parent, child, x});
         });
    return edges;
  }

}  // namespace numsg
