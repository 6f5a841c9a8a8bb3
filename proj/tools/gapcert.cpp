#include <iostream>

#include "gapcert/cli.hpp"

int main(int argc, char** argv) { return gapcert::cli::main_entry(argc, argv, std::cout, std::cerr); }
