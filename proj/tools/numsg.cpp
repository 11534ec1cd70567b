#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "numsg/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return numsg::cli::run(args, std::cout, std::cerr);
}
