#include <iostream>
#include <string>
#include <vector>

#include "qindlab/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qindlab::cli::run_cli(args, std::cout, std::cerr);
}
