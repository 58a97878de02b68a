#include <iostream>

#include "crown_cli/app.hpp"

int main(int argc, char** argv) { return crown::cli::run(argc, argv, std::cout, std::cerr); }
