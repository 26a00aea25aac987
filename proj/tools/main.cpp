#include <iostream>

#include "qkp/cli.hpp"

int main(int argc, char** argv) { return qkp::cli::run(argc, argv, std::cout, std::cerr); }
