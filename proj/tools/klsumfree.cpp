#include <iostream>
#include <string>
#include <vector>

#include "klsf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return klsf::cli::run(args, std::cout, std::cerr);
}
