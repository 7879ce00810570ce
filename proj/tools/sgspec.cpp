#include "sgspec_cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return sgspec::cli::run_cli(argc, argv, std::cout, std::cerr); }
