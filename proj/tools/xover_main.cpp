#include <iostream>

#include "xover/cli.hpp"

int main(int argc, char** argv) { return xover::run_cli(argc, argv, std::cout, std::cerr); }
