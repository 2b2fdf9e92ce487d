#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto out = ybco::cli::run_main(args);
  (out.status >= 2 ? std::cerr : std::cout) << out.output;
  return out.status;
}
