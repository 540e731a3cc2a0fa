#include <iostream>

#include "crownlab/cli.hpp"

int main(int argc, char** argv) { return crownlab::cli::run(argc, argv, std::cout, std::cerr); }
