#include <iostream>
#include <string>
#include <vector>

#include "synviz/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return synviz::cli::run(args, std::cout, std::cerr);
}
