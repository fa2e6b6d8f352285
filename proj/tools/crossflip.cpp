#include <iostream>
#include <string>
#include <vector>

#include "crossflip/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return crossflip::run_cli(args, std::cout, std::cerr);
}
