#include <iostream>

#include "voxtopo/cli.hpp"

int main(int argc, char** argv) {
  return voxtopo::cli_main(argc, argv, std::cout, std::cerr);
}
