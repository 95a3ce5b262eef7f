#include <iostream>
#include <string>
#include <vector>

#include "hoffdig_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hoffdig::cli::run(args, std::cout, std::cerr);
}
