#include <iostream>
#include <string>
#include <vector>

#include "pell/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pell::run_cli(args, std::cout, std::cerr);
}
