#include <iostream>
#include <string>
#include <vector>

#include "fudg/toolkit/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fudg::toolkit::run_cli(args, std::cout, std::cerr);
}
