#include <iostream>

#include "doccluster/cli.hpp"

int main(int argc, char** argv) { return doccluster::cli_main(argc, argv, std::cout, std::cerr); }
