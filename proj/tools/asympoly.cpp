#include <iostream>
#include <string>
#include <vector>

#include "asympoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return asympoly::run_cli(std::move(args), std::cout, std::cerr);
}
