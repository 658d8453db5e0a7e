#include <iostream>

#include "gbei/cli.hpp"

int main(int argc, char **argv) { return gbei::run_cli(argc, argv, std::cout, std::cerr); }
