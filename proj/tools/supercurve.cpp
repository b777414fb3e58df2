#include <iostream>
#include <string>
#include <vector>

#include "supercurve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return supercurve::cli::run(args, std::cout, std::cerr);
}
