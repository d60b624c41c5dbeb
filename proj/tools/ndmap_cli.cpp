#include <iostream>
#include <string>
#include <vector>

#include "ndmap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ndmap::cli::main(args, std::cout, std::cerr);
}
