#include <iostream>
#include <string>
#include <vector>

#include "polcovar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polcovar::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
