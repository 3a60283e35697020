#include <iostream>

#include "ordamalg_cli/cli.hpp"

int main(int argc, char** argv) {
  return ordamalg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
