#include <iostream>

#include "smax/cli.hpp"

int main(int argc, char** argv) { return smax::cli::run(argc, argv, std::cout, std::cerr); }
