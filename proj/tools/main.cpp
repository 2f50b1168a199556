#include <iostream>

#include "rsic/cli.hpp"

int main(int argc, char** argv) { return rsic::runCli(argc, argv, std::cout, std::cerr); }
