#include <iostream>

#include "qcq/cli.hpp"

int main(int argc, char** argv) { return qcq::cli::run(argc, argv, std::cout, std::cerr); }
