#include <iostream>

#include "hopflab/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopflab::cli::run(args, std::cout, std::cerr);
}
