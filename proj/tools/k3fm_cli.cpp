#include "k3fm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return k3fm::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
