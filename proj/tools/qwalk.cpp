#include <iostream>

#include "qwalk/cli.hpp"

int main(int argc, char **argv) { return qwalk::cli::main_entry(argc, argv, std::cout, std::cerr); }
