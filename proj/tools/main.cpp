#include <iostream>

#include "mcthresh/cli.hpp"

int main(int argc, char** argv) { return mcthresh::cli::run_cli(argc, argv, std::cout, std::cerr); }
