#include <iostream>

#include "driftcas/cli.hpp"

int main(int argc, char** argv) { return driftcas::cli::run(argc, argv, std::cout, std::cerr); }
