#include "cvpt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cvpt::run_cli(argc, argv, std::cout, std::cerr); }
