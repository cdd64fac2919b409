#include <iostream>
#include <string>
#include <vector>

#include "haarmi/report.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return haarmi::cli_main(args, std::cout, std::cerr);
}
