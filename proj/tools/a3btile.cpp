// Executable wrapper: forwards the command line to the library driver.

#include <iostream>
#include <string>
#include <vector>

#include "a3b/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return a3b::run(args, std::cout, std::cerr);
}
