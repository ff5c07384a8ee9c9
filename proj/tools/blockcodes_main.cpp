#include <iostream>
#include <string>
#include <vector>

#include "blockcodes/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return blockcodes::cli(args, std::cin, std::cout, std::cerr);
}
