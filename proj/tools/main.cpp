#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return commitverb::cli::main(argc, argv, std::cout, std::cerr); }
