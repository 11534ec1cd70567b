// Graphviz export of the two enumeration trees. Nodes are labeled by their
// minimal generators, edges by the element x of the step.

#ifndef NUMSG_CLI_DOT_HPP_
#define NUMSG_CLI_DOT_HPP_

#include <string>  // for string

#include "numsg/executor.hpp"  // for Executor

namespace numsg::cli {

  std::string irreducible_dot(int frobenius, Executor const& executor);

  std::string descending_dot(int frobenius, int min_type,
                             Executor const& executor);

}  // namespace numsg::cli

#endif  // NUMSG_CLI_DOT_HPP_
