#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sl3t::cli::run(argc, argv, std::cout, std::cerr); }
