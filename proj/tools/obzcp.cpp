#include <iostream>

#include "obzcp/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return obzcp::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
