#include <iostream>
#include <string>
#include <vector>

#include "rsh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rsh::cli_main(std::move(args), std::cout, std::cerr);
}
