#include <iostream>

#include "dihedral/cli_commands.hpp"

int main(int argc, char** argv) {
  return dihedral::run_cli(argc, argv, std::cout, std::cerr);
}
