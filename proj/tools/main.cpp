#include <iostream>

#include "clifford/cli.hpp"

int main(int argc, char** argv) { return clifford::run_cli(argc, argv, std::cout, std::cerr); }
