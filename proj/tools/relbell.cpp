#include <cstdlib>
#include <iostream>

#include "relbell/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    std::optional<std::string> env_seed;
    if (char const* s = std::getenv("RELBELL_SEED")) env_seed = s;
    return relbell::cli::run(args, std::cout, std::cerr, env_seed);
}
