#include <iostream>

#include "subord/cli.hpp"

int main(int argc, char** argv) { return subord::run_cli(argc, argv, std::cout, std::cerr); }
