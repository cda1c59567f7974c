#include <iostream>

#include "cgk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cgk::run_cli(args, std::cout, std::cerr);
}
