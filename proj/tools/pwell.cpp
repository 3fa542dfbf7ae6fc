#include <iostream>

#include "pwell/cli/commands.hpp"

int main(int argc, char** argv) { return pwell::cli::run_cli(argc, argv, std::cout, std::cerr); }
