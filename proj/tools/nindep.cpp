#include <iostream>
#include <string>
#include <vector>

#include "nindep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nindep::cli::run(args, std::cout, std::cerr);
}
