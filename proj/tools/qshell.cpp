#include <iostream>

#include "qho/cli.hpp"

int main(int argc, char** argv) {
  return qho::cli::execute(argc, argv, std::cout, std::cerr);
}
