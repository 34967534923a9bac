#include <iostream>

#include "dhermite_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dhermite::cli::run(args, std::cout, std::cerr);
}
