#include <iostream>
#include <string>
#include <vector>

#include "qbaker/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qbaker::cli_dispatch(args, std::cout, std::cerr);
}
