#include <iostream>

#include "pronounflow/cli.hpp"

int main(int argc, char** argv) {
  return pronounflow::cli::run(argc, argv, std::cout, std::cerr);
}
