#include <iostream>

#include "hookid_cli/cli.hpp"

int main(int argc, char** argv) { return hookid::cli::run(argc, argv, std::cout, std::cerr); }
