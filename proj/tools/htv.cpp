#include <iostream>

#include "htv/cli/options.hpp"

int main(int argc, char** argv) { return htv::cli::main_entry(argc, argv, std::cout, std::cerr); }
