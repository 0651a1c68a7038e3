#include <iostream>
#include <string>
#include <vector>

#include "loghodge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return loghodge::cli::run(args, std::cout, std::cerr);
}
