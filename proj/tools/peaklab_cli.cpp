#include <iostream>

#include "peaklab/cli.hpp"

int main(int argc, char** argv) {
  return peaklab::cli_main(argc, argv, std::cout, std::cerr);
}
