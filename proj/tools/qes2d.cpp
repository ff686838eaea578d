#include <iostream>

#include "qes2d/cli.hpp"

int main(int argc, char** argv) { return qes2d::run_cli(argc, argv, std::cout, std::cerr); }
