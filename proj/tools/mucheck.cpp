#include <iostream>
#include <string>
#include <vector>

#include "mucalc/driver.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mucalc::run_cli(args, std::cout, std::cerr);
}
