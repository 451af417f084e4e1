#include "ovk/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ovk::cli::run(argc, argv, std::cout, std::cerr); }
