#include <iostream>

#include "ltlwb/cli/cli.hpp"

int main(int argc, char** argv) { return ltlwb::cli::run(argc, argv, std::cout, std::cerr); }
