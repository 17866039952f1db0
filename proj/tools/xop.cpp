#include "xop/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return xop::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
