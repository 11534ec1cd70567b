// Brute-force ground truth for small Frobenius numbers: every subset of
// {1, ..., F-1} plus F is tried as a gap set.

#ifndef NUMSG_ORACLE_HPP_
#define NUMSG_ORACLE_HPP_

#include <optional>  // for optional

#include "enumeration.hpp"  // for EnumerationResult
#include "executor.hpp"     // for Executor, sequential_executor

namespace numsg {

  inline constexpr int kDefaultOracleLimit = 18;

  // Every numerical semigroup with Frobenius number exactly F. Throws
  // invalid_parameters when F < 1 and limit_exceeded when F > limit.
  EnumerationResult all_with_frobenius(
      int             frobenius,
      int             limit    = kDefaultOracleLimit,
      Executor const& executor = sequential_executor());

  // The almost symmetric ones among all_with_frobenius(F), restricted to
  // type t when given.
  EnumerationResult oracle_as(int                frobenius,
                              std::optional<int> type     = std::nullopt,
                              int                limit    = kDefaultOracleLimit,
                              Executor const&    executor = sequential_executor());

}  // namespace numsg

#endif  // NUMSG_ORACLE_HPP_
