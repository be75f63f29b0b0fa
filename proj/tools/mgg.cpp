#include <iostream>

#include "mgg/cli.hpp"

int main(int argc, char** argv) { return mgg::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
