#include "lcs/cli.hpp"

int main(int argc, char** argv) { return lcs::cli::run(argc, argv, std::cout, std::cerr); }
