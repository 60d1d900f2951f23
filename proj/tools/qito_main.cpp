#include <iostream>

#include "qito/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qito::run(args, std::cout, std::cerr);
}
