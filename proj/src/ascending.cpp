#include "numsg/ascending.hpp"

#include <algorithm>  // for merge, min, max
#include <iterator>   // for back_inserter
#include <span>       // for span
#include <string>     // for to_string
#include <utility>    // for as_const, move

#include "numsg/classify.hpp"     // for as_exists, is_almost_symmetric
#include "numsg/errors.hpp"       // for invalid_parameters, NUMSG_ASSERT
#include "numsg/irreducible.hpp"  // for enumerate_irreducible

namespace numsg {

  namespace {

    std::vector<int> upper_generators(Semigroup const& s) {
      int const        f = s.frobenius();
      std::vector<int> out;
      for (int x : minimal_generators(s)) {
        if (2 * x > f && x < f) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Backtracks over subsets of `upper` in increasing order. For x <= y in
    // A we have x + y - F < x, so once y is added every pair involving y can
    // be decided against the elements already chosen.
    template <typename Emit>
    void for_each_removal(Semigroup const&     s,
                          std::span<int const> upper,
                          std::size_t          min_size,
                          std::size_t          max_size,
                          Emit&&               emit) {
      int const        f = s.frobenius();
      std::vector<int> chosen;
      BitTable         in_a(static_cast<std::size_t>(f) + 1);

      auto admissible = [&](int y) {
        auto blocked = [&](int x) {
          int const z = x + y - f;
          return s.contains(z) && !in_a.test(static_cast<std::size_t>(z));
        };
        if (blocked(y)) {
          return false;
        }
        return std::none_of(chosen.begin(), chosen.end(), blocked);
      };

      auto recurse = [&](auto& self, std::size_t from) -> void {
        if (chosen.size() >= min_size) {
          emit(std::as_const(chosen));
        }
        if (chosen.size() == max_size) {
          return;
        }
        for (std::size_t j = from; j < upper.size(); ++j) {
          int const y = upper[j];
          if (!admissible(y)) {
            continue;
          }
          chosen.push_back(y);
          in_a.set(static_cast<std::size_t>(y));
          self(self, j + 1);
          in_a.reset(static_cast<std::size_t>(y));
          chosen.pop_back();
        }
      };
      recurse(recurse, 0);
    }

    void require_positive(int f, int t) {
      if (f < 1 || t < 1) {
        throw invalid_parameters("Frobenius number and type must be >= 1, "
                                 "found F = " + std::to_string(f)
                                 + ", t = " + std::to_string(t));
      }
    }

  }  // namespace

  int b_count(Semigroup const& s) {
    if (s.genus() == 0) {
      throw invalid_parameters("b(S) is undefined for the naturals");
    }
    return static_cast<int>(upper_generators(s).size());
  }

  std::vector<std::vector<int>> removal_candidates(Semigroup const& s,
                                                   int               type) {
    if (type < 1) {
      throw invalid_parameters("type must be >= 1, found "
                               + std::to_string(type));
    }
    if (s.genus() == 0) {
      throw invalid_parameters("removal sets need a semigroup other than N");
    }
    auto const        upper = upper_generators(s);
    std::size_t const k     = static_cast<std::size_t>((type + 1) / 2 - 1);
    std::vector<std::vector<int>> out;
    for_each_removal(s, upper, k, k, [&](std::vector<int> const& a) {
      out.push_back(a);
    });
    return out;
  }

  EnumerationResult as_type_range(int              frobenius,
                                  int              min_type,
                                  int              max_type,
                                  Executor const&  executor,
                                  AscendingOptions options) {
    require_positive(frobenius, min_type);
    require_positive(frobenius, max_type);
    EnumerationResult result;
    result.algorithm = Algorithm::ascending;

    // Feasible types share the parity of F.
    int lo = std::max(min_type, 1);
    int hi = std::min(max_type, frobenius);
    if ((frobenius + lo) % 2 != 0) {
      ++lo;
    }
    if ((frobenius + hi) % 2 != 0) {
      --hi;
    }
    if (lo > hi) {
      return result;
    }
    NUMSG_ASSERT(as_exists(frobenius, lo) && as_exists(frobenius, hi),
                 "type bounds are feasible");

    int const         base   = frobenius % 2 == 0 ? 2 : 1;
    std::size_t const k_min  = static_cast<std::size_t>((lo - base) / 2);
    std::size_t const k_max  = static_cast<std::size_t>((hi - base) / 2);
    auto const        irr    = enumerate_irreducible(frobenius, executor);
    auto const&       bases  = irr.semigroups;
    std::vector<std::vector<Semigroup>> found(bases.size());

    executor.parallel_for(bases.size(), [&](std::size_t i) {
      Semigroup const& s     = bases[i];
      auto const       upper = upper_generators(s);
      if (options.prune_by_b && upper.size() < k_min) {
        return;
      }
      for_each_removal(s, upper, k_min, k_max, [&](std::vector<int> const& a) {
        std::vector<int> gaps;
        gaps.reserve(s.genus() + a.size());
        std::merge(s.gaps().begin(),
                   s.gaps().end(),
                   a.begin(),
                   a.end(),
                   std::back_inserter(gaps));
        found[i].push_back(Semigroup::from_trusted_gaps(std::move(gaps)));
#ifdef NUMSG_CHECKS
        auto const st = compute_stats(found[i].back());
        NUMSG_ASSERT(st.frobenius == frobenius
                         && st.type
                                == 2 * static_cast<int>(a.size()) + base
                         && is_almost_symmetric(st),
                     "ascending output is almost symmetric with the "
                     "expected Frobenius number and type");
#endif
      });
    });

    for (auto& part : found) {
      for (auto& s : part) {
        result.semigroups.push_back(std::move(s));
      }
    }
    result.depth = k_max;
    canonicalize(result);
    return result;
  }

  EnumerationResult as_with_type(int              frobenius,
                                 int              type,
                                 Executor const&  executor,
                                 AscendingOptions options) {
    require_positive(frobenius, type);
    if (!as_exists(frobenius, type)) {
      EnumerationResult empty;
      empty.algorithm = Algorithm::ascending;
      return empty;
    }
    return as_type_range(frobenius, type, type, executor, options);
  }

  EnumerationResult as_all_ascending(int frobenius, Executor const& executor) {
    require_positive(frobenius, 1);
    return as_type_range(frobenius, 1, frobenius, executor);
  }

}  // namespace numsg
