#include <iostream>
#include <string>
#include <vector>

#include "eulerref/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eulerref::dispatch(args, std::cout, std::cerr);
}
