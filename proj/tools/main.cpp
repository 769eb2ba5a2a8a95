#include <iostream>

#include "angleset/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return angleset::cli::run(args, std::cout, std::cerr);
}
