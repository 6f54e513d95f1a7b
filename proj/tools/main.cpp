#include <iostream>
#include <string>
#include <vector>

#include "zeck/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zeck::run_cli(args, std::cout, std::cerr);
}
