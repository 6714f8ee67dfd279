#include <iostream>

#include "mzv/cli.hpp"

int main(int argc, char** argv) { return mzv::run(argc, argv, std::cin, std::cout, std::cerr); }
