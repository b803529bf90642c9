#include "selfenergy/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return selfenergy::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
