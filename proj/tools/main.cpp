#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return acta::run_cli(argc, argv, std::cout, std::cerr); }
