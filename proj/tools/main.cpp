#include <iostream>

#include "strebel/cli.hpp"

int main(int argc, char** argv) { return strebel::cli::run(argc, argv, std::cout, std::cerr); }
