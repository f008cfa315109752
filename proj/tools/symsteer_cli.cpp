#include <iostream>

#include "symsteer/cli.hpp"

int main(int argc, char** argv) { return symsteer::run_cli(argc, argv, std::cout, std::cerr); }
