#include <iostream>

#include "rmc/cli.hpp"

int main(int argc, char** argv) {
    return rmc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
