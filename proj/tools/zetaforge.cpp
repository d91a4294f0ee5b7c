#include <iostream>

#include "zetaforge/cli.hpp"

int main(int argc, char** argv) { return zetaforge::cli::run_main(argc, argv, std::cout, std::cerr); }
