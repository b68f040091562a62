#include <iostream>

#include "kuifje/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kuifje::run_cli(args, std::cout, std::cerr);
}
