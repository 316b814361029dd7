#include <iostream>
#include <string>
#include <vector>

#include "gfwilson/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return gfwilson::cli::run(args, std::cout, std::cerr);
}
