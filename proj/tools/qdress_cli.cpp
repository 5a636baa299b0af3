#include <iostream>
#include <string>
#include <vector>

#include "qdress/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qdress::run_cli(args, std::cout, std::cerr);
}
