#include <iostream>

#include "slicefn/cli.hpp"

int main(int argc, char** argv) {
  return slicefn::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
