#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return mtrel::cli::run(argc, argv, std::cout, std::cerr); }
