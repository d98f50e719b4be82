#include <iostream>

#include "pire/cli/cli.hpp"

int main(int argc, char** argv) {
  return pire::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
