#include <iostream>
#include <string>
#include <vector>

#include "fproot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fproot::run_cli(args, std::cout, std::cerr);
}
