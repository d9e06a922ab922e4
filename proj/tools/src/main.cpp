#include <iostream>
#include <string>
#include <vector>

#include "antipodes/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return antipodes::cli::run(args, std::cout, std::cerr);
}
