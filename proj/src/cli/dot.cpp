#include "numsg/cli/dot.hpp"

#include <algorithm>  // for lower_bound
#include <map>        // for map
#include <sstream>    // for ostringstream
#include <vector>     // for vector

#include "numsg/descending.hpp"   // for descend_levels
#include "numsg/irreducible.hpp"  // for irreducible_tree, canonical_C
#include "numsg/classify.hpp"     // for canonical_C

namespace numsg::cli {

  namespace {
    std::string label(Semigroup const& s) {
      std::string out = "<";
      bool        first = true;
      for (int g : minimal_generators(s)) {
        out += first ? "" : ",";
        out += std::to_string(g);
        first = false;
      }
      return out + ">";
    }

    class DotWriter {
     public:
      explicit DotWriter(std::string const& name) {
        _out << "digraph " << name << " {\n";
      }

      std::size_t node(Semigroup const& s) {
        auto [it, inserted] = _ids.try_emplace(s.gaps(), _ids.size());
        if (inserted) {
          _out << "  n" << it->second << " [label=\"" << label(s) << "\"];\n";
        }
        return it->second;
      }

      void edge(std::size_t from, std::size_t to, int x) {
        _out << "  n" << from << " -> n" << to << " [label=\"" << x << "\"];\n";
      }

      std::string finish() {
        _out << "}\n";
        return _out.str();
      }

     private:
      std::ostringstream                         _out;
      std::map<std::vector<int>, std::size_t>    _ids;
    };
  }  // namespace

  std::string irreducible_dot(int frobenius, Executor const& executor) {
    DotWriter w("irreducible");
    w.node(canonical_C(frobenius));
    for (auto const& e : irreducible_tree(frobenius, executor)) {
      auto const from = w.node(e.parent);
      w.edge(from, w.node(e.child), e.x);
    }
    return w.finish();
  }

  std::string descending_dot(int             frobenius,
                             int             min_type,
                             Executor const& executor) {
    DotWriter  w("descending");
    auto const levels = descend_levels(frobenius, min_type, executor);
    w.node(levels.front().front().semigroup());
    for (std::size_t k = 1; k < levels.size(); ++k) {
      for (auto const& node : levels[k]) {
        // The parent is the child with its multiplicity turned back into a
        // gap.
        auto gaps = node.gaps();
        int  x    = node.multiplicity();
        gaps.insert(std::lower_bound(gaps.begin(), gaps.end(), x), x);
        auto const from = w.node(Semigroup::from_trusted_gaps(std::move(gaps)));
        w.edge(from, w.node(node.semigroup()), x);
      }
    }
    return w.finish();
  }

}  // namespace numsg::cli
