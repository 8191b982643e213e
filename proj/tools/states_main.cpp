#include <iostream>

#include "mpstates/cli.hpp"

int main(int argc, char** argv) { return mpstates::cli::run(argc, argv, std::cout, std::cerr); }
