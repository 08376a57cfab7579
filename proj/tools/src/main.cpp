#include <iostream>

#include "zdrlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zdrlab::run_cli(args, std::cout, std::cerr);
}
