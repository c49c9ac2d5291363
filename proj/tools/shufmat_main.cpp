#include <iostream>
#include <string>
#include <vector>

#include "shufmat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return shufmat::cli::run(std::move(args), std::cout, std::cerr);
}
