#include <iostream>

#include "irvmargin_cli/cli.hpp"

int main(int argc, char** argv) {
  return irvmargin::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
