#include <iostream>
#include <string>
#include <vector>

#include "confhodge_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return confhodge::cli::run(args, std::cout, std::cerr);
}
