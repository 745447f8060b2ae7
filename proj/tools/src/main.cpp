#include <iostream>

#include "g3af_cli/run.hpp"

int main(int argc, char** argv) { return g3af::cli::run(argc, argv, std::cout, std::cerr); }
