#include <iostream>

#include "shr/cli.hpp"

int main(int argc, char** argv) {
  return shr::cli_main(argc, argv, std::cout, std::cerr, std::cin);
}
