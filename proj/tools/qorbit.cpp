#include <iostream>

#include "qorbit_cli.hpp"

int main(int argc, char** argv) { return qorbit::cli::run(argc, argv, std::cout, std::cerr); }
