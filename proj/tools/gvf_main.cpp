#include <iostream>
#include <string>
#include <vector>

#include "gvf/cli.hpp"

int main(int argc, char** argv) {
  return gvf::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
