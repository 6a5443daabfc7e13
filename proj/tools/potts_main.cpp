#include "potts/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return potts::cli::run(argc, argv, std::cout, std::cerr); }
