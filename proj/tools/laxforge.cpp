#include <iostream>
#include <string>
#include <vector>

#include "laxforge/shell.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return laxforge::run_cli(args, std::cout, std::cerr);
}
