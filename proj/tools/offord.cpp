#include <iostream>

#include "offord/cli.hpp"

int main(int argc, char** argv) { return offord::cli::run(argc, argv, std::cout, std::cerr); }
