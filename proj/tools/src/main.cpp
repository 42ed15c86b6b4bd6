#include <iostream>
#include <string>
#include <vector>

#include "alcnr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return alcnr::cli::run(args, std::cin, std::cout, std::cerr);
}
