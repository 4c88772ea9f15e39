#include <iostream>
#include <string>
#include <vector>

#include "resilset/cli.hpp"

int main(int argc, char** argv) {
  return resil::cli::run(std::vector<std::string>(argv, argv + argc), std::cout,
                         std::cerr);
}
