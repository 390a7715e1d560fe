#include <iostream>

#include "lexigauge/cli.hpp"

int main(int argc, char** argv) {
  return lexigauge::cli::run(argc, argv, std::cout, std::cerr);
}
