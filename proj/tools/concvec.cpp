#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return concvec::cli::run(argc, argv, std::cout, std::cerr);
}
