// Numerical semigroups represented by their gap sets, and their basic
// invariants.

#ifndef NUMSG_SEMIGROUP_HPP_
#define NUMSG_SEMIGROUP_HPP_

#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <functional>  // for hash
#include <span>        // for span
#include <utility>     // for pair
#include <vector>      // for vector

#include "bit_table.hpp"  // for BitTable

namespace numsg {

  // A numerical semigroup S, identified by its sorted gap set N \ S. The
  // empty gap set is S = N. Values are immutable once constructed.
  class Semigroup {
   public:
    // S = N.
    Semigroup() = default;

    std::vector<int> const& gaps() const noexcept {
      return _gaps;
    }

    // max(gaps), or -1 for S = N.
    int frobenius() const noexcept {
      return _gaps.empty() ? -1 : _gaps.back();
    }

    std::size_t genus() const noexcept {
      return _gaps.size();
    }

    bool is_gap(int x) const noexcept {
      return x > 0 && _gap_bits.test(static_cast<std::size_t>(x));
    }

    bool contains(int x) const noexcept {
      return x >= 0 && !is_gap(x);
    }

    // Least positive element.
    int multiplicity() const noexcept;

    // Bit table over [0, F] with the gaps set.
    BitTable const& gap_bits() const noexcept {
      return _gap_bits;
    }

    // Builds a semigroup from a gap set the caller guarantees to be sorted,
    // positive and with additively closed complement. Checked builds verify
    // closure.
    static Semigroup from_trusted_gaps(std::vector<int> gaps);

    static Semigroup from_trusted_gaps(BitTable const& gaps);

    bool operator==(Semigroup const& that) const noexcept {
      return _gaps == that._gaps;
    }

    // Canonical order: lexicographic on the sorted gap sequence.
    std::strong_ordering operator<=>(Semigroup const& that) const noexcept {
      if (!_gaps.empty() && frobenius() == that.frobenius()) {
        return _gap_bits.compare_same_top(that._gap_bits);
      }
      return _gaps <=> that._gaps;
    }

   private:
    std::vector<int> _gaps;
    BitTable         _gap_bits;
  };

  // Derived invariants of a semigroup. For S = N: frobenius -1, multiplicity
  // 1, msg {1}, empty pf and type 0.
  struct Stats {
    int              frobenius = -1;
    std::size_t      genus     = 0;
    int              multiplicity = 1;
    std::vector<int> msg;
    std::vector<int> pf;
    int              type = 0;
    // N(S): gaps x with F - x in S.
    std::vector<int> gaps_first;
    // L(S): the remaining gaps.
    std::vector<int> gaps_second;
  };

  // Throws invalid_parameters for nonpositive entries and closure_violation
  // when two non-gaps add up to a gap. Input order and repeats are ignored.
  Semigroup from_gaps(std::span<int const> gaps);

  // Throws invalid_parameters for empty or nonpositive input and
  // not_numerical when gcd(gens) != 1.
  Semigroup from_generators(std::span<int const> gens);

  inline bool contains(Semigroup const& s, int x) noexcept {
    return s.contains(x);
  }

  Stats compute_stats(Semigroup const& s);

  // Minimal generators only; cheaper than compute_stats when that is all
  // that is needed.
  std::vector<int> minimal_generators(Semigroup const& s);

  // Pseudo-Frobenius numbers given the minimal generators of s.
  std::vector<int> pseudo_frobenius(Semigroup const&     s,
                                    std::span<int const> msg);

  // The first pair (a, b), a <= b, of nonzero non-gaps with a + b a gap, or
  // {0, 0} when the complement is closed.
  std::pair<int, int> find_closure_violation(BitTable const& gaps);

}  // namespace numsg

template <>
struct std::hash<numsg::Semigroup> {
  std::size_t operator()(numsg::Semigroup const& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int g : s.gaps()) {
      h = (h ^ static_cast<std::size_t>(g)) * 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // NUMSG_SEMIGROUP_HPP_
