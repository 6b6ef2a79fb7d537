#include <iostream>
#include <string>
#include <vector>

#include "momsym/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return momsym::cli::run(args, std::cout, std::cerr);
}
