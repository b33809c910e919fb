#include <iostream>

#include "tcconf/cli.hpp"

int main(int argc, char** argv) { return tcconf::cli::main_entry(argc, argv, std::cout, std::cerr); }
