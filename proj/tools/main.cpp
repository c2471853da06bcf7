#include "n2vx/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    return n2vx::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                          std::cerr);
}
