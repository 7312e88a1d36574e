#include <iostream>

#include "goat/cli/commands.hpp"

int main(int argc, char** argv) { return goat::cli::run(argc, argv, std::cout, std::cerr); }
