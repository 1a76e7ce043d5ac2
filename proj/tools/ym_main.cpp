#include <iostream>

#include "ym/cli.hpp"

int main(int argc, char** argv) { return ym::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr); }
