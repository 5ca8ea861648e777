#include <iostream>
#include <string>
#include <vector>

#include "zeroseq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zeroseq::dispatch(args, std::cin, std::cout, std::cerr);
}
