#include <iostream>

#include "ms2c/cli.hpp"

int main(int argc, char** argv) { return ms2c::cli_main(argc, argv, std::cout, std::cerr); }
