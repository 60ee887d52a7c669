#include <iostream>
#include <string>
#include <vector>

#include "modseries/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modseries::cli::run(args, std::cout);
}
