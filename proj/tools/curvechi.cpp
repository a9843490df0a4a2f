#include <iostream>
#include <string>
#include <vector>

#include "curvechi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return curvechi::run(args, std::cout, std::cerr);
}
