#include <iostream>
#include <string>
#include <vector>

#include "schubreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return schubreg::run_cli(args, std::cout, std::cerr);
}
