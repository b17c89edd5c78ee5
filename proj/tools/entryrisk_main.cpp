#include <iostream>

#include "entryrisk/cli.hpp"

int main(int argc, char** argv) { return entryrisk::cli::run(argc, argv, std::cout, std::cerr); }
