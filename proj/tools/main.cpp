#include "superosc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return superosc::cli::run(argc, argv, std::cout, std::cerr);
}
