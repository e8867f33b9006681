#include <iostream>

#include "sextic/cli/commands.hpp"

int main(int argc, char** argv) { return sextic::cli::run_cli(argc, argv, std::cout, std::cerr); }
