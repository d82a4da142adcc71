#include <iostream>

#include "psearch/cli.hpp"

int main(int argc, char** argv) {
  return psearch::run_cli(argc, argv, std::cout, std::cerr);
}
