#include <iostream>
#include <string>
#include <vector>

#include "lpalie/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lpalie::run_cli(args, std::cin, std::cout, std::cerr);
}
