#include <iostream>

#include "zetaseries/harness.hpp"

int main(int argc, char** argv) { return zetaseries::harness::cli_main(argc, argv, std::cout, std::cerr); }
