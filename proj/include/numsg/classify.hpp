// Symmetry, irreducibility and almost-symmetry predicates, plus the two
// distinguished semigroups C(F) and M(F).

#ifndef NUMSG_CLASSIFY_HPP_
#define NUMSG_CLASSIFY_HPP_

#include "semigroup.hpp"  // for Semigroup, Stats

namespace numsg {

  // The predicates below require S != N and throw invalid_parameters
  // otherwise. The Stats overloads must be given compute_stats(s).

  // PF(S) = {F}.
  bool is_symmetric(Stats const& st);
  bool is_symmetric(Semigroup const& s);

  // F even and PF(S) = {F/2, F}.
  bool is_pseudo_symmetric(Stats const& st);
  bool is_pseudo_symmetric(Semigroup const& s);

  bool is_irreducible(Stats const& st);
  bool is_irreducible(Semigroup const& s);

  // L(S) is contained in PF(S). Also checks 2 g = F + t and throws
  // internal_error if the two characterizations disagree.
  bool is_almost_symmetric(Stats const& st);
  bool is_almost_symmetric(Semigroup const& s);

  // C(F): gaps {1, ..., floor(F/2), F} for F even, {1, ..., (F-1)/2, F}
  // for F odd. Throws invalid_parameters when F < 1.
  Semigroup canonical_C(int frobenius);

  // M(F) = {0, F+1, F+2, ...}. Throws invalid_parameters when F < 1.
  Semigroup canonical_M(int frobenius);

  // Whether some almost symmetric semigroup has Frobenius number F and type
  // t: F + t even and t <= F. False for nonpositive arguments.
  bool as_exists(int frobenius, int type) noexcept;

}  // namespace numsg

#endif  // NUMSG_CLASSIFY_HPP_
