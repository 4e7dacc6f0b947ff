#include <iostream>
#include <string>
#include <vector>

#include "hopoly/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopoly::cli::run(args, std::cout, std::cerr);
}
