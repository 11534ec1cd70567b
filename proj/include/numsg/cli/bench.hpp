// Timing harness comparing the enumerators on a list of Frobenius numbers.

#ifndef NUMSG_CLI_BENCH_HPP_
#define NUMSG_CLI_BENCH_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "json.hpp"               // for ordered_json
#include "numsg/enumeration.hpp"  // for Algorithm
#include "numsg/executor.hpp"     // for Executor
#include "numsg/oracle.hpp"       // for kDefaultOracleLimit

namespace numsg::cli {

  struct BenchConfig {
    std::vector<int>       frobenius = {13, 14, 15, 20, 25, 30, 40};
    std::vector<Algorithm> algorithms
        = {Algorithm::ascending, Algorithm::descending};
    int         oracle_limit = kDefaultOracleLimit;
    std::size_t threads      = 1;
  };

  struct BenchRow {
    int         frobenius;
    Algorithm   algorithm;
    double      seconds;
    std::size_t count;
  };

  struct BenchReport {
    std::vector<int>         frobenius;
    std::vector<Algorithm>   algorithms;
    std::vector<BenchRow>    rows;
    std::vector<std::string> notes;
    std::size_t              threads = 1;
    std::string              machine;
    std::string              timestamp;
  };

  // Runs every (F, algorithm) pair, ascending and descending computing A(F)
  // and the oracle its almost symmetric filter. Oracle runs above
  // config.oracle_limit are skipped with a note. Throws invalid_parameters
  // for an empty Frobenius or algorithm list.
  BenchReport run_bench(BenchConfig const& config, Executor const& executor);

  // Every algorithm reports the same count for each F.
  bool counts_consistent(BenchReport const& report);

  // Console table: one column per F, one row of seconds per algorithm and
  // a final row of counts.
  std::string render_table(BenchReport const& report);

  nlohmann::ordered_json to_json(BenchReport const& report);

}  // namespace numsg::cli

#endif  // NUMSG_CLI_BENCH_HPP_
