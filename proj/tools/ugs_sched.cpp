#include <iostream>

#include "ugs_cli.hpp"

int main(int argc, char** argv) {
  return ugs::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
