#include <iostream>

#include "altkurepa/cli.hpp"

int main(int argc, char** argv) {
  return altkurepa::cli::run(argc, argv, std::cout, std::cerr);
}
