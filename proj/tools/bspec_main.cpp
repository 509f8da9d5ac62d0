#include <iostream>
#include <string>
#include <vector>

#include "bspec/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bspec::cli::run(args, std::cout, std::cerr);
}
