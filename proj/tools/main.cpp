#include <iostream>
#include <string>
#include <vector>

#include "fwh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fwh::run_cli(std::move(args), std::cout, std::cerr);
}
