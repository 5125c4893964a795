#include "lpakit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lpakit::run_cli(argc, argv, std::cout, std::cerr); }
