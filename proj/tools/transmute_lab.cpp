#include <iostream>
#include <string>
#include <vector>

#include "transmute/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return transmute::cli::run_cli(args, std::cout, std::cerr);
}
