#include <iostream>
#include <vector>

#include "torus2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torus2::run_cli(args, std::cout, std::cerr);
}
