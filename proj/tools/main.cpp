#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    try {
        return degbern::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "degbern: " << e.what() << '\n';
        return degbern::cli::kExitFail;
    }
}
