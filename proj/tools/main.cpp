#include <iostream>
#include <vector>

#include "tropcone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tropcone::cli::run(args, std::cin, std::cout, std::cerr);
}
