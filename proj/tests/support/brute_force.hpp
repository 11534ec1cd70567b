// Definitional reference implementations used only by tests. Nothing here
// touches the numsg library.

#ifndef NUMSG_TESTS_SUPPORT_BRUTE_FORCE_HPP_
#define NUMSG_TESTS_SUPPORT_BRUTE_FORCE_HPP_

#include <algorithm>  // for find
#include <cstdint>    // for uint32_t
#include <set>        // for set
#include <vector>     // for vector

namespace brute {

  using GapSet = std::vector<int>;

  inline bool member(GapSet const& gaps, int x) {
    return x >= 0 && std::find(gaps.begin(), gaps.end(), x) == gaps.end();
  }

  inline int frobenius(GapSet const& gaps) {
    return gaps.empty() ? -1 : gaps.back();
  }

  // Double loop over all pairs of nonzero members below F.
  inline bool closed(GapSet const& gaps) {
    int const f = frobenius(gaps);
    for (int a = 1; a <= f; ++a) {
      for (int b = 1; a + b <= f; ++b) {
        if (member(gaps, a) && member(gaps, b) && !member(gaps, a + b)) {
          return false;
        }
      }
    }
    return true;
  }

  // Every semigroup with Frobenius number f, by plain bitmask scan.
  inline std::vector<GapSet> all_with_frobenius(int f) {
    std::vector<GapSet> out;
    for (std::uint32_t mask = 0; mask < (1U << (f - 1)); ++mask) {
      GapSet g;
      for (int v = 1; v < f; ++v) {
        if ((mask >> (v - 1)) & 1U) {
          g.push_back(v);
        }
      }
      g.push_back(f);
      if (closed(g)) {
        out.push_back(g);
      }
    }
    return out;
  }

  // x + s in S for every nonzero s in S with s <= F + x.
  inline std::vector<int> pseudo_frobenius(GapSet const& gaps) {
    std::vector<int> pf;
    int const        f = frobenius(gaps);
    for (int x : gaps) {
      bool ok = true;
      for (int s = 1; s <= f + x && ok; ++s) {
        if (member(gaps, s) && !member(gaps, x + s)) {
          ok = false;
        }
      }
      if (ok) {
        pf.push_back(x);
      }
    }
    return pf;
  }

  inline std::vector<int> minimal_generators(GapSet const& gaps) {
    int const        f = frobenius(gaps);
    int              m = 1;
    while (!member(gaps, m)) {
      ++m;
    }
    std::vector<int> msg;
    for (int s = 1; s <= f + m; ++s) {
      if (!member(gaps, s)) {
        continue;
      }
      bool sum = false;
      for (int a = 1; a < s && !sum; ++a) {
        sum = member(gaps, a) && member(gaps, s - a);
      }
      if (!sum) {
        msg.push_back(s);
      }
    }
    return msg;
  }

  // L(S) contained in PF(S).
  inline bool almost_symmetric(GapSet const& gaps) {
    int const f  = frobenius(gaps);
    auto const pf = pseudo_frobenius(gaps);
    for (int x : gaps) {
      if (!member(gaps, f - x)
          && std::find(pf.begin(), pf.end(), x) == pf.end()) {
        return false;
      }
    }
    return true;
  }

  inline int type(GapSet const& gaps) {
    return static_cast<int>(pseudo_frobenius(gaps).size());
  }

  // Almost symmetric semigroups with Frobenius f and, when t > 0, type t.
  inline std::set<GapSet> as_sets(int f, int t = 0) {
    std::set<GapSet> out;
    for (auto const& g : all_with_frobenius(f)) {
      if (almost_symmetric(g) && (t == 0 || type(g) == t)) {
        out.insert(g);
      }
    }
    return out;
  }

}  // namespace brute

#endif  // NUMSG_TESTS_SUPPORT_BRUTE_FORCE_HPP_
