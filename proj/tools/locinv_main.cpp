#include <iostream>
#include <string>
#include <vector>

#include "locinv/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return locinv::run(args, std::cout, std::cerr);
}
