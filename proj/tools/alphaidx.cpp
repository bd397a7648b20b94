#include <iostream>

#include "alphaidx/cli.hpp"

int main(int argc, char** argv) { return alphaidx::cli::run(argc, argv, std::cout, std::cerr); }
