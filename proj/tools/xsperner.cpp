#include <iostream>

#include "xsperner/cli.hpp"

int main(int argc, char** argv) { return xsperner::cli::main_with_args(argc, argv, std::cout, std::cerr); }
