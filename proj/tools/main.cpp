#include <iostream>

#include "winding/cli.hpp"

int main(int argc, char** argv) { return winding::run_cli(argc, argv, std::cout, std::cerr); }
