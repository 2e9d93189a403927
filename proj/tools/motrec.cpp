#include <iostream>
#include <string>
#include <vector>

#include "motrec/run.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv, argv + argc);
    return motrec::run_cli(args, std::cin, std::cout, std::cerr);
}
