#include <iostream>

#include "ehi/cli.hpp"

int main(int argc, char** argv) {
  return ehi::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
