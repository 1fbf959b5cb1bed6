#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pathcast/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> curves_env;
    if (const char* env = std::getenv("PATHCAST_CURVES")) curves_env = env;
    return pathcast::cli::main_entry(args, std::cout, std::cerr, curves_env);
}
