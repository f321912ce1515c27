#include <iostream>

#include "qwhitney/cli.hpp"

int main(int argc, char** argv) { return qwhitney::cli::run_cli(argc, argv, std::cout, std::cerr); }
