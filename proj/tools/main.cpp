#include <iostream>
#include <string>
#include <vector>

#include "chyp/cli/cli.hpp"

int main(int argc, char** argv) {
  return chyp::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
