#include "symmaj/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return symmaj::run_cli(argc, argv, std::cout, std::cerr);
}
