#include <iostream>

#include "dimwit/cli.hpp"

int main(int argc, char** argv) {
  return dimwit::cli::run(argc, argv, std::cout, std::cerr);
}
