#include <iostream>
#include <string>
#include <vector>

#include "fmq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return fmq::run_cli(args, std::cout, std::cerr);
}
