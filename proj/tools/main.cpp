#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return latmeans::cli::run(argc, argv, std::cout, std::cerr); }
