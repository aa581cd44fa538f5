#include <iostream>

#include "gtomo/cli.hpp"

int main(int argc, char** argv) { return gtomo::cli::run(argc, argv, std::cout, std::cerr); }
