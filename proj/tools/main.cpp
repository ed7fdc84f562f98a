#include <iostream>
#include <string>
#include <vector>

#include "sgpq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgpq::run(args, std::cout, std::cerr);
}
