#include <iostream>

#include "coxeter/cli.hpp"

int main(int argc, char** argv) {
  return coxeter::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
