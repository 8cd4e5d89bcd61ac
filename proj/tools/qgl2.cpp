#include <iostream>
#include <string>
#include <vector>

#include "qgl2/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qgl2::cli::run(args, std::cout, std::cerr);
}
