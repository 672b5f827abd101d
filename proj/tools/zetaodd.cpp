#include <iostream>

#include "zetaodd/cli.hpp"

int main(int argc, char** argv) { return zetaodd::cli::run(argc, argv, std::cout, std::cerr); }
