#include <iostream>

#include "mixmult/cli.hpp"

int main(int argc, char** argv) { return mixmult::cli::main_entry(argc, argv, std::cout, std::cerr); }
