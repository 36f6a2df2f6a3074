#include <iostream>

#include "leibcoh/cli.hpp"

int main(int argc, char** argv) { return leibcoh::cli::main_entry(argc, argv, std::cout, std::cerr); }
