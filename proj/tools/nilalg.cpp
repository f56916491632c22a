#include <iostream>

#include "nilalg/cli.hpp"

int main(int argc, char** argv) {
  return nilalg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
