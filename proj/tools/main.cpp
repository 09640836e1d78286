#include <iostream>

#include "lexdense/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lexdense::cli::run(args, std::cout, std::cerr);
}
