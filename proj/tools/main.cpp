#include <iostream>
#include <vector>

#include "rookmn/cli.hpp"

int main(int argc, char** argv) {
  return rookmn::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
