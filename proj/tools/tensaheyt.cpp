#include <iostream>
#include <string>
#include <vector>

#include "tensaheyt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tensaheyt::cli::run(args, std::cout, std::cerr);
}
