#include <iostream>
#include <string>
#include <vector>

#include "mixres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mixres::run(args, std::cout, std::cerr);
}
