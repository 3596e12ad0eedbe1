#include <iostream>
#include <string>
#include <vector>

#include "linkbound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return linkbound::run_cli(args, std::cout, std::cerr);
}
