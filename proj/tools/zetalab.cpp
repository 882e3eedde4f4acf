#include <iostream>
#include <string>
#include <vector>

#include "zetalab/harness.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return zetalab::harness::run_cli(args, std::cout, std::cerr);
}
