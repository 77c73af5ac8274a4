#include "regbound/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return regbound::run_cli(args, std::cin, std::cout, std::cerr);
}
