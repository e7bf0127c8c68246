#include <iostream>

#include "lir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lir::cli::dispatch(std::move(args), std::cout, std::cerr);
}
