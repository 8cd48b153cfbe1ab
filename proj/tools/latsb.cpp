#include <iostream>
#include <string>
#include <vector>

#include "latsb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return latsb::cli::run(args, std::cout, std::cerr);
}
