#include "numsg/classify.hpp"

#include <algorithm>  // for includes
#include <string>     // for to_string

#include "numsg/errors.hpp"  // for invalid_parameters, internal_error

namespace numsg {

  namespace {
    void require_not_N(Stats const& st) {
      if (st.frobenius < 0) {
        throw invalid_parameters(
            "predicate is undefined for the semigroup of all naturals");
      }
    }

    void require_frobenius(int f) {
      if (f < 1) {
        throw invalid_parameters("Frobenius number must be >= 1, found "
                                 + std::to_string(f));
      }
    }
  }  // namespace

  bool is_symmetric(Stats const& st) {
    require_not_N(st);
    return st.type == 1;
  }

  bool is_symmetric(Semigroup const& s) {
    return is_symmetric(compute_stats(s));
  }

  bool is_pseudo_symmetric(Stats const& st) {
    require_not_N(st);
    return st.frobenius % 2 == 0 && st.type == 2
           && st.pf[0] == st.frobenius / 2;
  }

  bool is_pseudo_symmetric(Semigroup const& s) {
    return is_pseudo_symmetric(compute_stats(s));
  }

  bool is_irreducible(Stats const& st) {
    return is_symmetric(st) || is_pseudo_symmetric(st);
  }

  bool is_irreducible(Semigroup const& s) {
    return is_irreducible(compute_stats(s));
  }

  bool is_almost_symmetric(Stats const& st) {
    require_not_N(st);
    bool const by_subset = std::includes(st.pf.begin(),
                                         st.pf.end(),
                                         st.gaps_second.begin(),
                                         st.gaps_second.end());
    bool const by_genus
        = 2 * static_cast<long>(st.genus) == st.frobenius + st.type;
    if (by_subset != by_genus) {
      throw internal_error("almost symmetry tests disagree for F = "
                           + std::to_string(st.frobenius));
    }
    return by_subset;
  }

  bool is_almost_symmetric(Semigroup const& s) {
    return is_almost_symmetric(compute_stats(s));
  }

  Semigroup canonical_C(int frobenius) {
    require_frobenius(frobenius);
    std::vector<int> gaps;
    for (int x = 1; 2 * x <= frobenius; ++x) {
      gaps.push_back(x);
    }
    gaps.push_back(frobenius);
    return Semigroup::from_trusted_gaps(std::move(gaps));
  }

  Semigroup canonical_M(int frobenius) {
    require_frobenius(frobenius);
    std::vector<int> gaps(frobenius);
    for (int x = 1; x <= frobenius; ++x) {
      gaps[x - 1] = x;
    }
    return Semigroup::from_trusted_gaps(std::move(gaps));
  }

  bool as_exists(int frobenius, int type) noexcept {
    return frobenius >= 1 && type >= 1 && type <= frobenius
           && (frobenius + type) % 2 == 0;
  }

}  // namespace numsg
