#include <iostream>
#include <string>
#include <vector>

#include "nomaec/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nomaec::cli::run(args, std::cout, std::cerr);
}
