#include <iostream>

#include "normgeo/cli.hpp"

int main(int argc, char** argv) { return normgeo::main_entry(argc, argv, std::cout, std::cerr); }
