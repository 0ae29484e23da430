#include <iostream>
#include <string>
#include <vector>

#include "tkc/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tkc::run(args, std::cout, std::cerr);
}
