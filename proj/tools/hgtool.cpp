#include <iostream>
#include <string>
#include <vector>

#include "hyper/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hyper::cli::run(args, std::cout, std::cerr);
}
