#include <iostream>
#include <string>
#include <vector>

#include "dhlrw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dhlrw::run_cli(args, std::cout, std::cerr);
}
