#include <iostream>
#include <vector>

#include "qeccat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qeccat::cli::run(args, std::cout, std::cerr);
}
