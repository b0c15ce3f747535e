#include <iostream>

#include "lacunary/cli.hpp"

int main(int argc, char** argv) { return lacunary::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
