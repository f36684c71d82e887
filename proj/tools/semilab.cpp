#include <iostream>

#include "semilab/cli.hpp"

int main(int argc, char** argv) {
  return semilab::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
