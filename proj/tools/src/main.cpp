#include <iostream>

#include "c1p/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return c1p::run_cli(args, std::cout, std::cerr);
}
