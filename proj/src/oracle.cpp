#include "numsg/oracle.hpp"

#include <algorithm>  // for min
#include <cstdint>    // for uint32_t
#include <string>     // for to_string

#include "numsg/classify.hpp"  // for is_almost_symmetric
#include "numsg/errors.hpp"    // for invalid_parameters, limit_exceeded

namespace numsg {

  namespace {

    // Values 1..F-1 are decided in increasing order; bit v - 1 of the mask
    // set means v is a gap. A value may only become a gap if it is not the
    // sum of two members already decided, which is exactly the closure
    // condition once every value up to F has been decided.
    struct Search {
      int                     f;
      std::vector<char>       gap;  // indexed by value, 0..F
      std::vector<Semigroup>* out;

      bool sum_of_members(int v) const {
        for (int a = 1; 2 * a <= v; ++a) {
          if (!gap[a] && !gap[v - a]) {
            return true;
          }
        }
        return false;
      }

      void run(int v) {
        if (v == f) {
          if (sum_of_members(f)) {
            return;
          }
          std::vector<int> gaps;
          for (int x = 1; x <= f; ++x) {
            if (gap[x]) {
              gaps.push_back(x);
            }
          }
          out->push_back(Semigroup::from_trusted_gaps(std::move(gaps)));
          return;
        }
        gap[v] = 0;
        run(v + 1);
        if (!sum_of_members(v)) {
          gap[v] = 1;
          run(v + 1);
          gap[v] = 0;
        }
      }
    };

  }  // namespace

  EnumerationResult all_with_frobenius(int             frobenius,
                                       int             limit,
                                       Executor const& executor) {
    if (frobenius < 1) {
      throw invalid_parameters("Frobenius number must be >= 1, found "
                               + std::to_string(frobenius));
    }
    if (frobenius > limit) {
      throw limit_exceeded("oracle limited to F <= " + std::to_string(limit)
                           + ", requested " + std::to_string(frobenius));
    }
    // Partition on the gap pattern of the first few values.
    int const         prefix = std::min(frobenius - 1, 4);
    std::size_t const tasks  = std::size_t{1} << prefix;
    std::vector<std::vector<Semigroup>> found(tasks);
    executor.parallel_for(tasks, [&](std::size_t mask) {
      Search s{frobenius, std::vector<char>(frobenius + 1, 0), &found[mask]};
      s.gap[frobenius] = 1;
      for (int v = 1; v <= prefix; ++v) {
        if ((mask >> (v - 1)) & 1U) {
          if (s.sum_of_members(v)) {
            return;
          }
          s.gap[v] = 1;
        }
      }
      s.run(prefix + 1);
    });

    EnumerationResult result;
    result.algorithm = Algorithm::oracle;
    for (auto& part : found) {
      for (auto& s : part) {
        result.semigroups.push_back(std::move(s));
      }
    }
    canonicalize(result);
    return result;
  }

  EnumerationResult oracle_as(int                frobenius,
                              std::optional<int> type,
                              int                limit,
                              Executor const&    executor) {
    auto              all = all_with_frobenius(frobenius, limit, executor);
    EnumerationResult result;
    result.algorithm = Algorithm::oracle;
    for (auto& s : all.semigroups) {
      auto const st = compute_stats(s);
      if (is_almost_symmetric(st) && (!type || st.type == *type)) {
        result.semigroups.push_back(std::move(s));
      }
    }
    return result;
  }

}  // namespace numsg
