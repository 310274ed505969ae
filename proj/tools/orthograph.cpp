#include <iostream>

#include "ortho/cli.hpp"

int main(int argc, char** argv) {
  return ortho::cli_main(argc, argv, std::cout, std::cerr);
}
