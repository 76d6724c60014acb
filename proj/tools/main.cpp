#include <iostream>

#include "plotkin/cli.hpp"

int main(int argc, char** argv) {
    return plotkin::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
