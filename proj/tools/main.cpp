#include <iostream>
#include <string>
#include <vector>

#include "fibword/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fibword::run_cli(args, std::cout, std::cerr);
}
