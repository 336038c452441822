#include <iostream>
#include <string>
#include <vector>

#include "selberg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return selberg::run_cli(args, std::cout, std::cerr);
}
