#include <iostream>

#include "wal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wal::run_cli(args, std::cout, std::cerr);
}
