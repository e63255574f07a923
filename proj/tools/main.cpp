#include <iostream>

#include "chaincov/cli.hpp"

int main(int argc, char** argv) {
  return chaincov::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
