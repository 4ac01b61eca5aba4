// Thin executable wrapper around the library CLI entry point.

#include <string>
#include <vector>

#include "bdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bdual::run_cli(args);
}
