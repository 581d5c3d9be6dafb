#include <iostream>

#include "antipath/cli.hpp"

int main(int argc, char** argv) { return antipath::run_cli(argc, argv, std::cout, std::cerr); }
