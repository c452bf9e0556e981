#include <iostream>
#include <string>
#include <vector>

#include "sumdiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sumdiff::cli_main(args, std::cout, std::cerr);
}
